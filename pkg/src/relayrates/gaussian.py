"""Linear-Gaussian mutual-information engine.

A :class:`GaussianSystem` holds named random variables, each defined as a
linear combination of independent unit-variance Gaussian sources.  The
covariance of any subset of variables is a Gram matrix of coefficient rows,
so differential entropies reduce to log-(pseudo-)determinants and every
conditional mutual information to a four-term combination of them.

Degeneracy is first-class: signaling maps routinely contain exact linear
relations (a superposition layer equals the sum of its parts), so entropies
are computed on the support of the covariance via its pseudo-determinant,
and a conditional mutual information between deterministically related
arguments returns the +inf sentinel instead of raising.

Public rates are in bits; entropies are in nats.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import kernels

LN_2PIE = math.log(2.0 * math.pi * math.e)
_LN2 = math.log(2.0)

# Eigenvalues below REL_EIG_TOL * max(largest eigenvalue, 1) count as zero.
# On unit-variance Gram matrices the eigenvalue noise floor of a genuinely
# deterministic relation is ~1e-13, while deliberately small signaling
# coefficients can produce honest eigenvalues down to ~1e-9; 1e-12 splits
# the two regimes cleanly.
REL_EIG_TOL = 1e-12


class EntropyResult(NamedTuple):
    """Differential entropy on the support of the covariance.

    ``degenerate`` flags a rank-deficient covariance, i.e. the variable set
    contains a deterministic linear relation.
    """

    nats: float
    rank: int
    degenerate: bool


class GaussianSystem:
    """Immutable set of jointly Gaussian variables over independent sources.

    Instances are pure values: every operation is a function of the stored
    coefficients, and :meth:`add_variable` returns a new system.  A private
    memo of log-pseudo-determinants is the only internal state; it caches
    results of deterministic computations and is safe to share.
    """

    __slots__ = (
        "source_count", "_names", "_index", "_matrix", "_gram", "_ngram", "_memo", "_nmemo"
    )

    def __init__(self, source_count: int, variables: Mapping[str, Sequence[float]] | None = None):
        if source_count < 1:
            raise ValueError("source_count must be a positive integer")
        self.source_count = int(source_count)
        names: list[str] = []
        rows: list[np.ndarray] = []
        if variables:
            for name, coeffs in variables.items():
                row = self._check_row(name, coeffs, names)
                names.append(name)
                rows.append(row)
        self._finish(names, rows)

    def _check_row(self, name, coeffs, existing) -> np.ndarray:
        if not isinstance(name, str) or not name:
            raise ValueError("variable name must be a non-empty string")
        if name in existing:
            raise ValueError(f"duplicate variable name {name!r}")
        row = np.asarray(coeffs, dtype=np.float64)
        if row.shape != (self.source_count,):
            raise ValueError(
                f"variable {name!r}: expected {self.source_count} coefficients, got {row.shape}"
            )
        if not np.all(np.isfinite(row)):
            raise ValueError(f"variable {name!r}: coefficients must be finite")
        return row

    def _finish(self, names: list[str], rows: list[np.ndarray]) -> None:
        self._names = tuple(names)
        self._index = {n: i for i, n in enumerate(names)}
        if rows:
            m = np.vstack(rows)
        else:
            m = np.zeros((0, self.source_count))
        m = np.ascontiguousarray(m)
        m.setflags(write=False)
        self._matrix = m
        gram = np.ascontiguousarray(m @ m.T)
        gram.setflags(write=False)
        self._gram = gram
        # Mutual information is invariant under rescaling any single variable,
        # so CMI queries run on the unit-variance (correlation) Gram matrix.
        # This keeps the relative eigenvalue tolerance meaningful when
        # variances span many decades (huge compression noises).  Variables
        # whose variance is numeric dust relative to the system scale stay
        # zero rows; normalizing them would amplify float noise into
        # spurious unit directions.
        d = np.diag(gram)
        floor = max(float(d.max(initial=0.0)), 1.0) * 1e-28
        with np.errstate(divide="ignore"):
            scale = np.where(d > floor, 1.0 / np.sqrt(np.maximum(d, 1e-300)), 0.0)
        ngram = np.ascontiguousarray(gram * scale[:, None] * scale[None, :])
        ngram.setflags(write=False)
        self._ngram = ngram
        self._memo: dict[tuple[int, ...], tuple[float, int]] = {}
        self._nmemo: dict[tuple[int, ...], tuple[float, int]] = {}

    @classmethod
    def _from_rows(cls, source_count: int, names: list[str], rows: list[np.ndarray]) -> "GaussianSystem":
        sys_ = cls.__new__(cls)
        sys_.source_count = source_count
        sys_._finish(names, rows)
        return sys_

    # -- construction ----------------------------------------------------

    def add_variable(self, name: str, coefficients: Sequence[float]) -> "GaussianSystem":
        """Return a new system with ``name`` registered; this one is unchanged."""
        row = self._check_row(name, coefficients, self._names)
        return self._from_rows(self.source_count, [*self._names, name], [*self._matrix, row])

    # -- introspection ---------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def coefficients(self, name: str) -> np.ndarray:
        return self._matrix[self._idx(name)].copy()

    def covariance(self, names: Sequence[str]) -> np.ndarray:
        idx = [self._idx(n) for n in names]
        return self._gram[np.ix_(idx, idx)].copy()

    def _idx(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        """Sorted unique row indices for a set of names (plan compilation)."""
        return tuple(sorted({self._idx(n) for n in names}))

    # -- entropy and mutual information ----------------------------------

    def lpdet(self, key: tuple[int, ...]) -> tuple[float, int]:
        """Memoized (log pseudo-det, rank) for a canonical index tuple."""
        hit = self._memo.get(key)
        if hit is None:
            hit = kernels.lpdet_rank(self._gram, np.asarray(key, dtype=np.int64), REL_EIG_TOL)
            self._memo[key] = hit
        return hit

    def _nlpdet(self, key: tuple[int, ...]) -> tuple[float, int]:
        """Same, on the unit-variance Gram matrix (mutual-information path)."""
        hit = self._nmemo.get(key)
        if hit is None:
            hit = kernels.lpdet_rank(self._ngram, np.asarray(key, dtype=np.int64), REL_EIG_TOL)
            self._nmemo[key] = hit
        return hit

    def entropy(self, names: Sequence[str]) -> EntropyResult:
        """Differential entropy of the listed variables, in nats.

        Repeated names are kept (the covariance is then rank-deficient by
        construction and the result is flagged degenerate).
        """
        idx = tuple(self._idx(n) for n in names)
        lp, rank = self.lpdet(tuple(sorted(idx)))
        return EntropyResult(0.5 * (rank * LN_2PIE + lp), rank, rank < len(idx))

    def _cmi_from_keys(self, kac, kbc, kabc, kc) -> float:
        lac, rac = self._nlpdet(kac)
        lbc, rbc = self._nlpdet(kbc)
        labc, rabc = self._nlpdet(kabc)
        lc, rc = self._nlpdet(kc)
        if rac + rbc - rabc - rc > 0:
            return math.inf
        bits = 0.5 * (lac + lbc - labc - lc) / _LN2
        return bits if bits > 0.0 else 0.0

    def conditional_mutual_info(
        self, a: Iterable[str], b: Iterable[str], c: Iterable[str] = ()
    ) -> float:
        """I(A;B|C) in bits, clamped at 0; +inf when A and B are
        deterministically related given C."""
        ia = {self._idx(n) for n in a}
        ib = {self._idx(n) for n in b}
        ic = {self._idx(n) for n in c}
        return self._cmi_from_keys(
            tuple(sorted(ia | ic)),
            tuple(sorted(ib | ic)),
            tuple(sorted(ia | ib | ic)),
            tuple(sorted(ic)),
        )

    def mutual_info(self, a: Iterable[str], b: Iterable[str]) -> float:
        return self.conditional_mutual_info(a, b, ())

    def __repr__(self) -> str:
        return f"GaussianSystem(sources={self.source_count}, variables={list(self._names)})"
