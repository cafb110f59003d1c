"""Intersection arrays and the arithmetic they determine."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntersectionArray:
    """The array {b_0,...,b_{d-1}; c_1,...,c_d} of a candidate distance-regular graph."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        if not self.b:
            raise ValueError("intersection array needs diameter d >= 1")
        if len(self.b) != len(self.c):
            raise ValueError(
                f"b-list length {len(self.b)} != c-list length {len(self.c)}"
            )
        for name, seq in (("b", self.b), ("c", self.c)):
            for i, x in enumerate(seq):
                if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                    raise ValueError(f"{name}[{i}] = {x!r} is not a positive integer")
        if self.c[0] != 1:
            raise ValueError(f"c_1 must be 1, got {self.c[0]}")

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def b0(self) -> int:
        return self.b[0]

    @property
    def c2(self) -> int | None:
        return self.c[1] if self.d >= 2 else None

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class DerivedParameters:
    a: tuple[int, ...]
    k: tuple[Fraction, ...]
    n: Fraction

    @property
    def a1(self) -> int:
        """Degree of every local graph."""
        return self.a[1]

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.k)


def derive_parameters(arr: IntersectionArray) -> DerivedParameters:
    d, b, c = arr.d, arr.b, arr.c
    # a_i = b_0 - b_i - c_i, with b_d taken as 0
    a = [0] + [b[0] - b[i] - c[i - 1] for i in range(1, d)] + [b[0] - c[d - 1]]
    k = [Fraction(1)]
    for i in range(d):
        k.append(k[i] * b[i] / c[i])
    return DerivedParameters(a=tuple(a), k=tuple(k), n=sum(k, Fraction(0)))
