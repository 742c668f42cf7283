"""
Exact sparse linear algebra over the rationals.

Vectors are sparse maps from canonical keys to :class:`fractions.Fraction`.
A :class:`Subspace` keeps its rows in fully reduced echelon form; the pivot
of a row is its least key in window order (small dessins first).
"""
from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from typing import Iterable

from .dessin import key_order

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


class SparseVector(Mapping):
    """
    Immutable sparse vector with exact coefficients; zero entries are never stored.

        >>> u = SparseVector({"1:0/0": 1, "0:/": -1})
        >>> u - u
        SparseVector({})
    """
    __slots__ = ("_d",)

    def __init__(self, entries=None):
        d = {}
        if entries:
            for k, c in (entries.items() if isinstance(entries, Mapping) else entries):
                c = _frac(c)
                if c:
                    d[k] = c
        self._d = d

    @classmethod
    def _wrap(cls, d: dict) -> "SparseVector":
        v = cls.__new__(cls)
        v._d = d
        return v

    @classmethod
    def basis(cls, key: str) -> "SparseVector":
        return cls._wrap({key: Fraction(1)})

    def __getitem__(self, key):
        return self._d[key]

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, SparseVector):
            return self._d == other._d
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __repr__(self):
        return f"SparseVector({self._d!r})"

    def __add__(self, other):
        return vector_combine(1, self, 1, other)

    def __sub__(self, other):
        return vector_combine(1, self, -1, other)

    def __neg__(self):
        return SparseVector._wrap({k: -c for k, c in self._d.items()})

    def __rmul__(self, a):
        return vector_combine(a, self, 0, ZERO)

    def is_zero(self) -> bool:
        return not self._d

    def support(self) -> list[str]:
        return sorted(self._d, key=key_order)

    def pivot(self) -> str:
        return min(self._d, key=key_order)

    def to_json(self) -> dict:
        return {"terms": [{"key": k, "coeff": f"{c.numerator}/{c.denominator}"} for k, c in
                          ((k, self._d[k]) for k in self.support())]}

    @classmethod
    def from_json(cls, obj) -> "SparseVector":
        try:
            return cls((t["key"], Fraction(t["coeff"])) for t in obj["terms"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ValueError(f"malformed vector object: {e!r}") from None


ZERO = SparseVector()


def vector_combine(a, u: Mapping, b, v: Mapping) -> SparseVector:
    """
    Return ``a*u + b*v`` exactly.

        >>> vector_combine(Fraction(1, 2), {"K": 1}, Fraction(1, 3), {"K": 3})
        SparseVector({'K': Fraction(3, 2)})
    """
    a, b = _frac(a), _frac(b)
    d = {}
    if a:
        for k, c in u.items():
            d[k] = a * c
    if b:
        for k, c in v.items():
            x = d.get(k, 0) + b * c
            if x:
                d[k] = x
            else:
                d.pop(k, None)
    return SparseVector._wrap(d)


class Subspace:
    """
    Span of a set of vectors, maintained in reduced row echelon form.

    Every row has pivot coefficient 1 and no row has an entry at another
    row's pivot.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self._rows: dict[str, dict] = {}
        # key -> pivots of rows having a non-pivot entry at key
        self._cols: dict[str, set] = {}
        for v in vectors:
            self.insert(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list[str]:
        return sorted(self._rows, key=key_order)

    def rows(self) -> list[SparseVector]:
        return [SparseVector._wrap(dict(self._rows[p])) for p in self.pivots]

    def _reduce(self, v: Mapping) -> dict:
        if isinstance(v, SparseVector):
            r = dict(v._d)
        else:
            r = {k: _frac(c) for k, c in v.items() if c}
        for p in [k for k in r if k in self._rows]:
            c = r.get(p)
            if not c:
                continue
            for k, x in self._rows[p].items():
                y = r.get(k, 0) - c * x
                if y:
                    r[k] = y
                else:
                    del r[k]
        return r

    def reduce(self, v: Mapping) -> SparseVector:
        """Remainder of ``v`` after eliminating every pivot; zero iff ``v`` lies in the span."""
        return SparseVector._wrap(self._reduce(v))

    def __contains__(self, v: Mapping) -> bool:
        return not self._reduce(v)

    def insert(self, v: Mapping) -> bool:
        """Add ``v`` to the span; return whether the rank grew."""
        r = self._reduce(v)
        if not r:
            return False
        p = min(r, key=key_order)
        c = r[p]
        if c != 1:
            r = {k: x / c for k, x in r.items()}
        # back-substitute into rows having an entry at the new pivot
        for q in self._cols.pop(p, ()):
            row = self._rows[q]
            f = row[p]
            for k, x in r.items():
                y = row.get(k, 0) - f * x
                if y:
                    if k not in row and k != q:
                        self._cols.setdefault(k, set()).add(q)
                    row[k] = y
                else:
                    del row[k]
                    if k != p:
                        self._cols[k].discard(q)
        self._rows[p] = r
        for k in r:
            if k != p:
                self._cols.setdefault(k, set()).add(p)
        return True

    def copy(self) -> "Subspace":
        S = Subspace()
        S._rows = {p: dict(r) for p, r in self._rows.items()}
        S._cols = {k: set(s) for k, s in self._cols.items()}
        return S

    def check(self) -> None:
        """Assert the echelon invariants (used in tests)."""
        for p, row in self._rows.items():
            assert row[p] == 1
            assert min(row, key=key_order) == p
            for q in self._rows:
                if q != p:
                    assert q not in row
            for k in row:
                if k != p:
                    assert p in self._cols[k]
        for k, s in self._cols.items():
            for q in s:
                assert k in self._rows[q]


def reduce(S: Subspace, v: Mapping) -> SparseVector:
    return S.reduce(v)


def insert(S: Subspace, v: Mapping) -> bool:
    return S.insert(v)


def subspace_leq(A: Subspace, B: Subspace) -> bool:
    """Whether span(A) is contained in span(B)."""
    return all(not B._reduce(row) for row in A._rows.values())


def not_contained(A: Subspace, B: Subspace, limit: int | None = None) -> list[SparseVector]:
    """Rows of ``A`` (in pivot order) that do not lie in span(B)."""
    out = []
    for p in A.pivots:
        if B._reduce(A._rows[p]):
            out.append(SparseVector._wrap(dict(A._rows[p])))
            if limit is not None and len(out) >= limit:
                break
    return out


def projection_rank(S: Subspace, keys) -> int:
    """Rank of the rows of ``S`` restricted to the coordinates in ``keys``."""
    keys = set(keys)
    T = Subspace()
    for row in S._rows.values():
        T.insert({k: c for k, c in row.items() if k in keys})
    return T.rank
