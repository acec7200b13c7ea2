"""RCC11 constraint networks: algebraic closure and scenario search.

A network holds a RelSet constraint for every ordered pair of variables,
with the diagonal fixed to {EQ} and converse rows kept synchronized.
Algebraic closure (path consistency) refines every constraint by the
table composition of its two-leg paths to a least fixpoint; scenario
search backtracks over base relations with closure as the forward check.

Closure does not decide satisfiability for RCC11 in general; scenario
search is the decision procedure offered here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .relations import FULL, BaseRel, RelSet, converse
from .table import CompTable, golden_table

EQ_SET = RelSet.of(BaseRel.EQ)


@dataclass(frozen=True)
class Network:
    variables: tuple[str, ...]
    constraints: tuple[tuple[RelSet, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise ValueError("duplicate variable names")
        if len(self.constraints) != n or any(len(row) != n for row in self.constraints):
            raise ValueError("constraint matrix shape mismatch")
        for i in range(n):
            if not self.constraints[i][i] <= EQ_SET:
                raise ValueError(
                    f"diagonal constraint on {self.variables[i]} must be EQ")
            for j in range(n):
                if self.constraints[j][i] != converse(self.constraints[i][j]):
                    raise ValueError(
                        f"constraints for ({self.variables[i]},"
                        f"{self.variables[j]}) are not converse-symmetric")

    @classmethod
    def build(cls, variables: list[str],
              constraints: dict[tuple[str, str], RelSet]) -> "Network":
        """Unstated pairs default to the universal relation set; stated
        pairs are intersected with the converse of their mirror statement."""
        n = len(variables)
        index = {v: i for i, v in enumerate(variables)}
        if len(index) != n:
            raise ValueError("duplicate variable names")
        grid = [[FULL if i != j else EQ_SET for j in range(n)] for i in range(n)]
        for (vi, vj), rels in constraints.items():
            i, j = index[vi], index[vj]
            if i == j:
                if rels != EQ_SET:
                    raise ValueError(f"diagonal constraint on {vi} must be EQ")
                continue
            grid[i][j] = grid[i][j] & rels
            grid[j][i] = grid[j][i] & converse(rels)
        return cls(tuple(variables), tuple(tuple(row) for row in grid))

    def constraint(self, vi: str, vj: str) -> RelSet:
        i = self.variables.index(vi)
        j = self.variables.index(vj)
        return self.constraints[i][j]

    def is_atomic(self) -> bool:
        return all(len(cell) == 1 for row in self.constraints for cell in row)


def closure(net: Network, table: CompTable | None = None) -> Network | None:
    """Least fixpoint of constraint refinement by composition over all
    triples, sweeping (i, j, k) in lexicographic order until stable.
    Returns None when some constraint empties (inconsistent network)."""
    t = table or golden_table()
    n = len(net.variables)
    grid = [list(row) for row in net.constraints]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for k in range(n):
                    if k == i or k == j:
                        continue
                    composed = RelSet(0)
                    for r1 in grid[i][j]:
                        row = t.cells[r1]
                        for r2 in grid[j][k]:
                            composed = composed | row[r2]
                    refined = grid[i][k] & composed
                    if not refined:
                        return None
                    if refined != grid[i][k]:
                        grid[i][k] = refined
                        grid[k][i] = converse(refined)
                        changed = True
    return Network(net.variables, tuple(tuple(row) for row in grid))


def scenario_search(net: Network,
                    table: CompTable | None = None) -> Network | None:
    """First atomic, algebraically closed refinement in deterministic
    branching order (cell order, then base-relation index), or None."""
    t = table or golden_table()
    closed = closure(net, t)
    if closed is None:
        return None
    n = len(closed.variables)
    for i in range(n):
        for j in range(i + 1, n):
            cell = closed.constraints[i][j]
            if len(cell) == 1:
                continue
            for rel in cell:
                grid = [list(row) for row in closed.constraints]
                grid[i][j] = RelSet.of(rel)
                grid[j][i] = RelSet.of(rel.converse)
                candidate = Network(closed.variables,
                                    tuple(tuple(row) for row in grid))
                result = scenario_search(candidate, t)
                if result is not None:
                    return result
            return None
    return closed


# ---------------------------------------------------------------------------
# JSON network files
# ---------------------------------------------------------------------------

def parse_network(text: str) -> Network:
    """{"vars": [...], "constraints": [{"i", "j", "rels": [...]}, ...]};
    unspecified pairs default to the universal relation set."""
    data = json.loads(text)
    variables = list(data["vars"])
    constraints: dict[tuple[str, str], RelSet] = {}
    for k, item in enumerate(data.get("constraints", [])):
        try:
            vi, vj = item["i"], item["j"]
            rels = RelSet.of(*(BaseRel[name] for name in item["rels"]))
        except KeyError as exc:
            raise ValueError(f"constraints[{k}]: bad entry ({exc})") from exc
        if vi not in variables or vj not in variables:
            raise ValueError(f"constraints[{k}]: unknown variable")
        key = (vi, vj)
        constraints[key] = constraints.get(key, FULL) & rels
    return Network.build(variables, constraints)


def network_json(net: Network) -> dict:
    n = len(net.variables)
    items = []
    for i in range(n):
        for j in range(i + 1, n):
            items.append({
                "i": net.variables[i],
                "j": net.variables[j],
                "rels": [r.name for r in net.constraints[i][j]],
            })
    return {"vars": list(net.variables), "constraints": items}
