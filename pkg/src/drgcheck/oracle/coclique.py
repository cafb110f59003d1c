"""Exact maximum cocliques by branch and bound."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

DEFAULT_CAP = 128


@dataclass(frozen=True)
class CocliqueWitness:
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def verify(self, g: Graph) -> bool:
        return all(w not in self.vertices for v in self.vertices for w in g.adjacency[v])


def max_coclique(g: Graph, cap: int = DEFAULT_CAP) -> CocliqueWitness:
    """A maximum independent set of ``g``.

    Searches for a maximum clique in the complement, pruning with greedy
    colouring bounds: a colour class of the complement is a clique of ``g``
    and contributes at most one vertex to any coclique.
    """
    n = g.vertex_count
    if n > cap:
        raise ValueError(f"{n} vertices exceeds the coclique oracle cap of {cap}")
    if n == 0:
        return CocliqueWitness(frozenset())
    full = (1 << n) - 1
    nbmask = [sum(1 << w for w in nb) for nb in g.adjacency]
    # candidates compatible with v: its non-neighbours other than v
    compat = [full & ~nbmask[v] & ~(1 << v) for v in range(n)]

    best: list[int] = []

    def colour_order(cand: int) -> list[tuple[int, int]]:
        out = []
        colour = 0
        left = cand
        while left:
            colour += 1
            q = left
            while q:
                v = (q & -q).bit_length() - 1
                # vertices in one colour class must be pairwise adjacent in g
                q &= nbmask[v]
                left &= ~(1 << v)
                out.append((v, colour))
        return out

    def expand(chosen: list[int], cand: int) -> None:
        nonlocal best
        for v, bound in reversed(colour_order(cand)):
            if len(chosen) + bound <= len(best):
                return
            chosen.append(v)
            nxt = cand & compat[v]
            if nxt:
                expand(chosen, nxt)
            elif len(chosen) > len(best):
                best = list(chosen)
            chosen.pop()
            cand &= ~(1 << v)

    expand([], full)
    witness = CocliqueWitness(frozenset(best))
    assert witness.verify(g)
    return witness
