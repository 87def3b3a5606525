"""Subset-sum cubes over F_p and their avoidance/containment dimensions.

A cube H(a0; a1..ad) is the set {a0 + sum of any sub-collection of the
generators} mod p. Generators must be pairwise distinct and nonzero (a zero
generator would inflate the dimension without changing the element set; all
dimensions reported here use the nonzero convention). Searches run over
element bitmasks, where adding a generator g is a cyclic shift-or.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CapabilityError
from .numtheory import PrimeContext, legendre_symbol

ELEMENT_ENUM_CAP = 30         # 2^d subset sums; keep enumeration honest
EXHAUSTIVE_P_CAP = 60         # default ceiling for exact searches
NONRESIDUE = "non-residue"
PRIMROOT = "primitive-root"
DEFAULT_SEED = 0x5EED

_PREDICATES = (NONRESIDUE, PRIMROOT)


@dataclass(frozen=True)
class HilbertCube:
    base: int
    gens: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("generators must be pairwise distinct")
        if any(g == 0 for g in self.gens):
            raise ValueError("generators must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.gens)

    def __str__(self):
        return f"({self.base};{','.join(map(str, self.gens))})"


@dataclass(frozen=True)
class CubeSearchResult:
    dim: int
    witness: HilbertCube
    exact: bool  # False: heuristic lower bound only


@dataclass(frozen=True)
class CubeCensus:
    """Exhaustive avoidance/containment dimensions for one prime."""

    p: int
    avoid_nonresidue: CubeSearchResult      # f
    avoid_primroot: CubeSearchResult        # F
    inside_nonresidue: CubeSearchResult     # f-bar
    inside_primroot: CubeSearchResult       # F-bar

    def chain_violations(self) -> list[str]:
        """Check F-bar <= f-bar = f <= F; the middle equality is verified,
        not assumed (it can fail when every maximal avoiding cube uses 0)."""
        f = self.avoid_nonresidue.dim
        big_f = self.avoid_primroot.dim
        fbar = self.inside_nonresidue.dim
        big_fbar = self.inside_primroot.dim
        out = []
        if not big_fbar <= fbar:
            out.append(f"F_bar={big_fbar} > f_bar={fbar}")
        if fbar != f:
            out.append(f"f_bar={fbar} != f={f}")
        if not f <= big_f:
            out.append(f"f={f} > F={big_f}")
        return out


def cube_elements(cube: HilbertCube, p: int) -> set[int]:
    """All subset-sum translates of the base, reduced mod p."""
    if cube.dim > ELEMENT_ENUM_CAP:
        raise CapabilityError(f"cube dimension {cube.dim} exceeds enumeration cap")
    elems = {cube.base % p}
    for g in cube.gens:
        elems |= {(x + g) % p for x in elems}
    return elems


def _target_set(ctx: PrimeContext, predicate: str) -> set[int]:
    if predicate == NONRESIDUE:
        return {a for a in range(1, ctx.p) if legendre_symbol(a, ctx.p) == -1}
    if predicate == PRIMROOT:
        bm = ctx.pr_bitmap()
        return {a for a in range(1, ctx.p) if bm >> a & 1}
    raise ValueError(f"unknown predicate {predicate!r}; expected one of {_PREDICATES}")


def cube_avoids(cube: HilbertCube, ctx: PrimeContext, predicate: str) -> bool:
    """True iff no cube element satisfies the predicate (0 satisfies neither)."""
    return not (cube_elements(cube, ctx.p) & _target_set(ctx, predicate))


def cube_contained(cube: HilbertCube, ctx: PrimeContext, predicate: str) -> bool:
    return cube_elements(cube, ctx.p) <= _target_set(ctx, predicate)


def small_elements_cube(dim: int) -> HilbertCube:
    """The cube (0; 1, 2, ..., d) whose elements fill [0, d(d+1)/2]."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    top = dim * (dim + 1) // 2
    if dim >= 2:
        assert top < dim * dim  # the classical smallness comparison
    return HilbertCube(0, tuple(range(1, dim + 1)))


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _max_cube_exhaustive(p: int, allowed_mask: int) -> CubeSearchResult:
    """Deepest cube whose elements stay inside allowed_mask, by pruned DFS.

    Generators are canonicalised ascending; branches die as soon as a partial
    element set leaves the allowed mask. Iteration order (base ascending,
    then generators lexicographically) makes the reported witness the least
    one among the maximal cubes.
    """
    if not allowed_mask:
        raise ValueError("empty target set admits no cube")
    full = (1 << p) - 1
    best_dim = 0
    best = HilbertCube(_mask_bits(allowed_mask)[0], ())

    def rot(bm: int, g: int) -> int:
        return ((bm << g) | (bm >> (p - g))) & full

    def grow(base: int, gens: tuple[int, ...], elems: int):
        nonlocal best_dim, best
        start = gens[-1] + 1 if gens else 1
        for g in range(start, p):
            new = elems | rot(elems, g)
            if new & ~allowed_mask:
                continue
            cand = gens + (g,)
            if len(cand) > best_dim:
                best_dim = len(cand)
                best = HilbertCube(base, cand)
            grow(base, cand, new)

    for base in _mask_bits(allowed_mask):
        grow(base, (), 1 << base)
    return CubeSearchResult(best_dim, best, exact=True)


def _max_cube_heuristic(p: int, allowed_mask: int, seed: int, restarts: int) -> CubeSearchResult:
    """Greedy growth with random restarts; yields a valid lower bound."""
    if not allowed_mask:
        raise ValueError("empty target set admits no cube")
    rng = random.Random(seed)
    full = (1 << p) - 1
    bases = _mask_bits(allowed_mask)
    best_dim = 0
    best = HilbertCube(bases[0], ())
    for _ in range(restarts):
        base = rng.choice(bases)
        elems = 1 << base
        gens: list[int] = []
        candidates = [g for g in range(1, p)]
        rng.shuffle(candidates)
        progress = True
        while progress:
            progress = False
            for g in candidates:
                if g in gens:
                    continue
                new = elems | (((elems << g) | (elems >> (p - g))) & full)
                if not new & ~allowed_mask:
                    gens.append(g)
                    elems = new
                    progress = True
        if len(gens) > best_dim or (len(gens) == best_dim
                                    and (base, tuple(sorted(gens))) < (best.base, best.gens)):
            best_dim = len(gens)
            best = HilbertCube(base, tuple(sorted(gens)))
    return CubeSearchResult(best_dim, best, exact=False)


def _allowed_mask(ctx: PrimeContext, predicate: str, contained: bool) -> int:
    target = _target_set(ctx, predicate)
    allowed = target if contained else set(range(ctx.p)) - target
    mask = 0
    for a in allowed:
        mask |= 1 << a
    return mask


def max_avoiding_dimension(ctx: PrimeContext, predicate: str, search: str = "exhaustive",
                           max_exhaustive_p: int = EXHAUSTIVE_P_CAP,
                           seed: int = DEFAULT_SEED, restarts: int = 40) -> CubeSearchResult:
    """Largest cube dimension avoiding the predicate set (f for non-residues,
    F for primitive roots)."""
    mask = _allowed_mask(ctx, predicate, contained=False)
    if search == "exhaustive":
        if ctx.p > max_exhaustive_p:
            raise CapabilityError(f"exhaustive cube search capped at p <= {max_exhaustive_p}")
        return _max_cube_exhaustive(ctx.p, mask)
    if search == "heuristic":
        return _max_cube_heuristic(ctx.p, mask, seed, restarts)
    raise ValueError(f"unknown search mode {search!r}")


def max_contained_dimension(ctx: PrimeContext, predicate: str, search: str = "exhaustive",
                            max_exhaustive_p: int = EXHAUSTIVE_P_CAP,
                            seed: int = DEFAULT_SEED, restarts: int = 40) -> CubeSearchResult:
    """Largest cube dimension entirely inside the predicate set (f-bar/F-bar)."""
    mask = _allowed_mask(ctx, predicate, contained=True)
    if search == "exhaustive":
        if ctx.p > max_exhaustive_p:
            raise CapabilityError(f"exhaustive cube search capped at p <= {max_exhaustive_p}")
        return _max_cube_exhaustive(ctx.p, mask)
    if search == "heuristic":
        return _max_cube_heuristic(ctx.p, mask, seed, restarts)
    raise ValueError(f"unknown search mode {search!r}")


def cube_census(ctx: PrimeContext, max_exhaustive_p: int = EXHAUSTIVE_P_CAP) -> CubeCensus:
    if ctx.p == 2:
        raise CapabilityError("cube census needs an odd prime")
    return CubeCensus(
        p=ctx.p,
        avoid_nonresidue=max_avoiding_dimension(ctx, NONRESIDUE, max_exhaustive_p=max_exhaustive_p),
        avoid_primroot=max_avoiding_dimension(ctx, PRIMROOT, max_exhaustive_p=max_exhaustive_p),
        inside_nonresidue=max_contained_dimension(ctx, NONRESIDUE, max_exhaustive_p=max_exhaustive_p),
        inside_primroot=max_contained_dimension(ctx, PRIMROOT, max_exhaustive_p=max_exhaustive_p),
    )


def longest_ap_in_cube(cube: HilbertCube, ctx: PrimeContext) -> tuple[int, int, int]:
    """Longest run {a*n + b : n = 1..L} inside the cube's element set.

    Maximised over steps a != 0 (and any b); ties break toward the smallest
    (a, b). Runs may wrap around mod p since elements are residues.
    """
    p = ctx.p
    elems = cube_elements(cube, p)
    if len(elems) == p:
        return p, 1, 0
    best = (0, 0, 0)
    for a in range(1, p):
        # walk each maximal run once, from its start
        for e in sorted(elems):
            if (e - a) % p in elems:
                continue
            length = 1
            x = e
            while (x + a) % p in elems:
                x = (x + a) % p
                length += 1
            b = (e - a) % p
            if length > best[0] or (length == best[0] and (a, b) < best[1:]):
                best = (length, a, b)
    return best
