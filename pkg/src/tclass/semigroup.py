"""Finite commutative semigroups given by a multiplication table."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct


@dataclass
class ClassSemigroup:
    reps: list
    table: list[list[int]]
    tags: list = field(default_factory=list)
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [str(r) for r in self.reps]

    def __len__(self):
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def idempotents(self) -> list[int]:
        return [e for e in self.elements if self.table[e][e] == e]

    def group_of(self, e: int) -> list[int]:
        """G_e: the elements x with xe = x that have an inverse relative to e."""
        T = self.table
        return [x for x in self.elements if T[x][e] == x and any(T[x][y] == e for y in self.elements)]

    @property
    def groups(self) -> dict[int, list[int]]:
        return {e: self.group_of(e) for e in self.idempotents}

    def is_regular(self, x: int) -> bool:
        T = self.table
        xx = T[x][x]
        return any(T[a][xx] == x for a in self.elements)

    def is_clifford(self) -> bool:
        return all(self.is_regular(x) for x in self.elements)

    def is_boolean(self) -> bool:
        return all(self.table[x][x] == x for x in self.elements)

    def is_commutative(self) -> bool:
        T = self.table
        return all(T[i][j] == T[j][i] for i, j in iproduct(self.elements, repeat=2))

    def is_associative(self) -> bool:
        T = self.table
        return all(T[T[i][j]][k] == T[i][T[j][k]] for i, j, k in iproduct(self.elements, repeat=3))

    def partition_exact(self) -> bool:
        """True iff the groups G_e cover every element exactly once."""
        seen = [0] * len(self)
        for members in self.groups.values():
            for x in members:
                seen[x] += 1
        return all(n == 1 for n in seen)

    def to_dict(self) -> dict:
        return {
            "elements": self.labels,
            "tags": self.tags,
            "table": self.table,
            "idempotents": self.idempotents,
            "groups": {str(e): g for e, g in self.groups.items()},
            "clifford": self.is_clifford(),
            "boolean": self.is_boolean(),
        }


def build_class_semigroup(reps, product, classify, tags=None, labels=None) -> ClassSemigroup:
    """Tabulate ``classify(product(r_i, r_j))`` over the representatives."""
    table = [[classify(product(I, J)) for J in reps] for I in reps]
    return ClassSemigroup(list(reps), table, list(tags or []), list(labels or []))
