"""Stanley-Reisner complexes and exact reduced simplicial homology.

Conventions: the reduced (augmented) chain complex is used throughout, so
the complex {<empty face>} has h~_{-1} = 1 and any full simplex has zero
homology everywhere. The void complex (no faces at all) carries no
homology and is rejected. All ranks are computed exactly: fraction-free
integer elimination in characteristic 0, modular elimination over GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import MonomialIdeal, mask_to_vars, vars_to_mask
from .errors import UnsupportedIdeal, VerticesOutsideComplex, VoidComplex


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means the rationals, a prime p
    means GF(p)."""

    char: int = 0

    def __post_init__(self) -> None:
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"{self.char} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        t = token.strip().lower()
        if t == "q":
            return cls(0)
        if t.startswith("gf") and t[2:].isdigit():
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {token!r}; use 'q' or 'gf<p>'")

    def __str__(self) -> str:
        return "q" if self.char == 0 else f"gf{self.char}"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertex set plus facets (maximal faces), both as variable bitmasks.

    An empty facet tuple is the void complex; the facet tuple (0,) is the
    complex whose only face is the empty set.
    """

    vertices: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.facets != tuple(sorted(set(self.facets))):
            raise ValueError("facets must be sorted and duplicate-free")
        for f in self.facets:
            if f & ~self.vertices:
                raise ValueError("facet outside the vertex set")
        for f in self.facets:
            for g in self.facets:
                if f != g and f & ~g == 0:
                    raise ValueError("facets are not an antichain")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for {<empty>}. Undefined (raises) on the void complex."""
        if self.is_void:
            raise VoidComplex("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def has_face(self, face_vars: Iterable[int]) -> bool:
        fmask = vars_to_mask(face_vars)
        return any(fmask & ~f == 0 for f in self.facets)

    def facet_sets(self) -> list[frozenset[int]]:
        return [mask_to_vars(f) for f in self.facets]

    def all_faces(self) -> list[int]:
        """Every face mask, sorted ascending (deterministic)."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            # standard submask walk, including 0
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted(seen)


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def stanley_reisner(a: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the variable sets supporting no generator.

    The zero ideal gives the full simplex; an ideal containing every
    variable gives {<empty>}; the unit ideal is rejected (its complex
    would be void, which homology excludes).
    """
    if a.is_unit:
        raise UnsupportedIdeal("the unit ideal has no Stanley-Reisner complex here")
    full = a.ambient.full_mask
    gens = a.gen_masks()
    if not gens:
        return SimplicialComplex(full, (full,))
    faces = [
        s for s in range(full + 1) if not any(g & ~s == 0 for g in gens)
    ]
    return SimplicialComplex(full, _maximal(faces))


def restrict(d: SimplicialComplex, w: int | Iterable[int]) -> SimplicialComplex:
    """Full subcomplex on the vertex subset w (indices or a ready bitmask)."""
    wmask = w if isinstance(w, int) else vars_to_mask(w)
    if wmask & ~d.vertices:
        raise VerticesOutsideComplex("restriction vertices outside the complex")
    if d.is_void:
        return SimplicialComplex(wmask, ())
    return SimplicialComplex(wmask, _maximal(f & wmask for f in d.facets))


# --- exact rank computations -------------------------------------------------


def _rank_char0(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) elimination over the integers; the result is
    the rank over the rationals. Pivots are chosen with minimal magnitude
    to limit entry growth; all divisions are exact."""
    if not rows or not rows[0]:
        return 0
    mat = [row[:] for row in rows]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            v = mat[i][col]
            if v and (pivot is None or abs(v) < abs(mat[pivot][col])):
                pivot = i
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, nrows):
            vi = mat[i][col]
            row_i, row_p = mat[i], mat[rank]
            for j in range(col, ncols):
                row_i[j] = (row_i[j] * pv - vi * row_p[j]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_gf2(rows: list[list[int]]) -> int:
    """Bit-packed elimination over GF(2)."""
    packed = []
    for row in rows:
        acc = 0
        for j, v in enumerate(row):
            if v & 1:
                acc |= 1 << j
        if acc:
            packed.append(acc)
    rank = 0
    while packed:
        piv = packed.pop()
        rank += 1
        low = piv & -piv
        packed = [r ^ piv if r & low else r for r in packed]
        packed = [r for r in packed if r]
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    mat = [[v % p for v in row] for row in rows]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        row_p = mat[rank]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(v - f * w) % p for v, w in zip(mat[i], row_p)]
        rank += 1
        if rank == nrows:
            break
    return rank


def _matrix_rank(rows: list[list[int]], field: FieldSpec) -> int:
    if field.char == 0:
        return _rank_char0(rows)
    if field.char == 2:
        return _rank_gf2(rows)
    return _rank_mod_p(rows, field.char)


# --- reduced homology --------------------------------------------------------


def _boundary_ranks(faces: tuple[int, ...], char: int) -> tuple[tuple[int, int], ...]:
    """For each homological degree i >= 0 with nonempty chain groups on both
    sides, the pair (i, rank of the boundary map C_i -> C_{i-1})."""
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    top = max(by_dim)
    field = FieldSpec(char)
    out = []
    for i in range(0, top + 1):
        lower = by_dim.get(i - 1, [])
        upper = by_dim.get(i, [])
        if not lower or not upper:
            out.append((i, 0))
            continue
        index = {f: r for r, f in enumerate(lower)}
        mat = [[0] * len(upper) for _ in lower]
        for col, f in enumerate(upper):
            sign = 1
            rest = f
            while rest:
                low = rest & -rest
                mat[index[f ^ low]][col] = sign
                sign = -sign
                rest ^= low
        out.append((i, _matrix_rank(mat, field)))
    return tuple(out)


@lru_cache(maxsize=None)
def _homology_of_faces(faces: tuple[int, ...], char: int) -> tuple[tuple[int, int], ...]:
    """Reduced homology ranks keyed by the face list itself (cacheable:
    restrictions repeat heavily across Hochster sweeps)."""
    by_dim: dict[int, int] = {}
    for f in faces:
        d = f.bit_count() - 1
        by_dim[d] = by_dim.get(d, 0) + 1
    top = max(by_dim)
    ranks = dict(_boundary_ranks(faces, char))
    out = []
    for i in range(-1, top + 1):
        ci = by_dim.get(i, 0)
        out.append((i, ci - ranks.get(i, 0) - ranks.get(i + 1, 0)))
    return tuple(out)


def _canonical_faces(d: SimplicialComplex) -> tuple[int, ...]:
    """Faces relabelled onto dense vertex bits so equal-shaped complexes on
    different vertex sets share cache entries."""
    support = 0
    for f in d.facets:
        support |= f
    bits = [i for i in range(support.bit_length()) if support >> i & 1]
    remap = {b: j for j, b in enumerate(bits)}
    faces = []
    for f in d.all_faces():
        g = 0
        rest = f
        while rest:
            low = rest & -rest
            g |= 1 << remap[low.bit_length() - 1]
            rest ^= low
        faces.append(g)
    return tuple(sorted(faces))


def reduced_homology_ranks(d: SimplicialComplex, field: FieldSpec) -> dict[int, int]:
    """h~_i(d; field) for i = -1 .. dim(d), as a dict."""
    if d.is_void:
        raise VoidComplex("the void complex has no homology")
    return dict(_homology_of_faces(_canonical_faces(d), field.char))
