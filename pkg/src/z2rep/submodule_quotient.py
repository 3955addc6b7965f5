"""Maximal invariant submodule W, quotient dimensions, and module classification.

W is generated from the two singular vectors chi01, chi10 at level 2M+1 by
the raising generators.  Its level-(2M+1+q) slice has the explicit spanning
family built from words in ap and atp applied to the two singular vectors;
independently, the same slice is computed as a bare span (breadth-first over
levels, reducing by exact rank), which never assumes the dimension formula.

For the one-dimensional family the quotient truncates: dim W saturates the
whole weight space beyond offset q = 2M, which is where the per-level
quotient dimension formula bottoms out at zero and the total closes at
(2M+1)^2.  For the two-dimensional family the quotient keeps constant
per-level dimension 4M+2 forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .rationals import format_rational
from .singular_solver import closed_form
from .verma import (Ket, VermaModule, Vector, act, act_word, enumerate_level,
                    vector_to_json)


class ConsistencyError(RuntimeError):
    """An internal cross-check that should be a theorem failed."""


def singular_pair(module: VermaModule, M: int) -> tuple[Vector, Vector]:
    return closed_form(module, "chi01", M), closed_form(module, "chi10", M)


def detect_singular_orders(module: VermaModule, cap: int = 32) -> list[int]:
    """All M <= cap whose existence constraint is met by the module parameters."""
    out = []
    for M in range(cap + 1):
        if module.kind == "Mr":
            if module.r + 2 * M == 0:
                out.append(M)
        else:
            if (module.r + 2 * M) ** 2 == module.lam:
                out.append(M)
    return out


def verma_dim(module: VermaModule, n: int) -> int:
    return n + 1 if module.kind == "Mr" else 2 * (n + 1)


def wbasis_words(q: int) -> list[tuple[str, ...]]:
    """Raising words (leftmost factor applied last) spanning one chi-branch at offset q."""
    words: list[tuple[str, ...]] = [("ap",) * q]
    for j in range(1, q // 2 + 1):
        tail = ("ap",) * (q - 2 * j)
        words.append(("atp", "ap") * j + tail)
        words.append(("ap", "atp") * j + tail)
    if q % 2 == 1:
        words.append(("atp", "ap") * ((q - 1) // 2) + ("atp",))
    return words


@dataclass
class SubmoduleLevel:
    module: VermaModule
    M: int
    q: int
    basis: list[Vector]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {"kind": self.module.kind, "M": self.M, "q": self.q,
                "dim": self.dim,
                "basis": [vector_to_json(v) for v in self.basis]}


def submodule_basis(module: VermaModule, M: int, q: int) -> SubmoduleLevel:
    """The explicit spanning family of W at offset q above level 2M+1.

    Checks exact linear independence: the family must have rank 2(q+1).
    For the one-dimensional module family this holds only up to q = 2M;
    beyond that the ambient weight space is too small and W saturates it,
    so the offset is rejected.
    """
    if q < 0:
        raise ValueError("offset must be nonnegative")
    if module.kind == "Mr" and q > 2 * M:
        raise ValueError(
            f"offset {q} exceeds the saturation bound 2M = {2 * M}; "
            "the submodule fills the whole weight space there")
    chi01, chi10 = singular_pair(module, M)
    vectors = [act_word(w, chi) for chi in (chi01, chi10) for w in wbasis_words(q)]
    kets = list(enumerate_level(module, 2 * M + 1 + q).kets)
    rows = [v.coords(kets) for v in vectors]
    if linalg.rank(rows) != 2 * (q + 1):
        raise ConsistencyError(
            f"spanning family at offset {q} has rank {linalg.rank(rows)}, "
            f"expected {2 * (q + 1)}")
    return SubmoduleLevel(module, M, q, vectors)


def submodule_span_dims(module: VermaModule, max_level: int,
                        orders: list[int] | None = None) -> dict[int, tuple]:
    """Exact per-level bases of W = (raising words applied to all singular pairs).

    Breadth-first over levels: each level is spanned by ap/atp images of the
    previous level, Lp/Ltp images of the one below, and any singular vectors
    seeded at the level itself.  Returns {level: (rref_rows, pivots, kets)}.
    """
    if orders is None:
        orders = detect_singular_orders(module)
    seeds: dict[int, list[Vector]] = {}
    for M in orders:
        if 2 * M + 1 <= max_level:
            chi01, chi10 = singular_pair(module, M)
            seeds.setdefault(2 * M + 1, []).extend([chi01, chi10])
    out: dict[int, tuple] = {}
    if not seeds:
        return out
    start = min(seeds)
    prev: list[Vector] = []
    prev2: list[Vector] = []
    for n in range(start, max_level + 1):
        cands = list(seeds.get(n, []))
        for v in prev:
            cands.append(act("ap", v))
            cands.append(act("atp", v))
        for v in prev2:
            cands.append(act("Lp", v))
            cands.append(act("Ltp", v))
        kets = list(enumerate_level(module, n).kets)
        rows = [v.coords(kets) for v in cands if not v.is_zero()]
        rr, pivots = linalg.rref(rows)
        out[n] = (rr, pivots, kets)
        basis_vecs = [Vector(module, dict(zip(kets, row))) for row in rr]
        prev, prev2 = basis_vecs, prev
    return out


def membership_matrix(M: int) -> list[list[int]]:
    """Coefficient matrix of the chi11 decomposition system (integer entries)."""
    a = [[0] * (M + 1) for _ in range(M + 1)]
    for j in range(M + 1):
        for p in range(M + 1):
            if 0 <= 2 * j - p <= M:
                a[j][p] = 2 ** (2 * j + 1 - p) * comb(M, 2 * j - p)
    return a


def membership_words(M: int) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Word pairs (applied to chi01 and chi10) whose sums carry the decomposition.

    Entry p is the pair for the unknown c_p, ordered p = 0..M.
    """
    words: list[tuple[tuple[str, ...], tuple[str, ...]]] = [None] * (M + 1)
    for k in range(M // 2 + 1):
        w01 = ("atp",) + ("ap",) * (2 * (M - 2 * k)) + ("Ltp",) * (2 * k)
        w10 = ("ap",) * (2 * (M - 2 * k) + 1) + ("Ltp",) * (2 * k)
        words[2 * k] = (w01, w10)
    for k in range((M - 1) // 2 + 1):
        w01 = ("ap",) * (2 * (M - 2 * k) - 1) + ("Ltp",) * (2 * k + 1)
        w10 = ("atp",) + ("ap",) * (2 * (M - 2 * k - 1)) + ("Ltp",) * (2 * k + 1)
        words[2 * k + 1] = (w01, w10)
    return words


@dataclass
class MembershipReport:
    M: int
    coefficients: list[Fraction]
    matrix: list[list[int]]
    determinant: Fraction
    residual_zero: bool

    def to_json(self) -> dict:
        return {"M": self.M,
                "coefficients": [format_rational(c) for c in self.coefficients],
                "matrix": self.matrix,
                "determinant": format_rational(self.determinant),
                "residual_zero": self.residual_zero}


def chi11_membership(M: int) -> MembershipReport:
    """Decompose the (1,1)-sector singular vector over raising words applied
    to chi01 and chi10, exactly.

    Solves the vector equation directly, then cross-checks the structured
    coefficient matrix: it must be nonsingular and reproduce the same unique
    solution.
    """
    module = VermaModule("Mr", Fraction(-2 * M))
    chi01, chi10 = singular_pair(module, M)
    chi11 = closed_form(module, "chi11", M)
    columns = [act_word(w01, chi01) + act_word(w10, chi10)
               for w01, w10 in membership_words(M)]
    kets = list(enumerate_level(module, 2 * (2 * M + 1)).kets)
    a_rows = [[col.coords(kets)[i] for col in columns] for i in range(len(kets))]
    rhs = chi11.coords(kets)
    coeffs = linalg.solve_unique(a_rows, rhs)
    combo = sum((c * col for c, col in zip(coeffs, columns)),
                Vector(module, {}))
    residual_zero = (chi11 - combo).is_zero()
    matrix = membership_matrix(M)
    determinant = linalg.det(matrix)
    if determinant == 0:
        raise ConsistencyError("structured coefficient matrix is singular")
    structured = linalg.solve_unique(matrix,
                                     [Fraction((-4) ** j * comb(M, j))
                                      for j in range(M + 1)])
    if structured != coeffs:
        raise ConsistencyError("structured system disagrees with the vector system")
    return MembershipReport(M, coeffs, matrix, determinant, residual_zero)


def quotient_dims(module: VermaModule, max_level: int,
                  exact: bool = True) -> list[dict]:
    """Per-level table of weight-space, submodule and quotient dimensions.

    exact=True recomputes dim W by span reduction; exact=False uses the
    closed formula min(2(q+1), weight-space dim) above the lowest singular
    level (only meaningful when a single M satisfies the constraint).
    """
    orders = detect_singular_orders(module)
    rows = []
    if exact:
        spans = submodule_span_dims(module, max_level, orders)
        wdim = {n: len(spans[n][0]) for n in spans}
    else:
        wdim = {}
        if orders:
            M = orders[0]
            for n in range(2 * M + 1, max_level + 1):
                q = n - (2 * M + 1)
                wdim[n] = min(2 * (q + 1), verma_dim(module, n))
    for n in range(max_level + 1):
        total = verma_dim(module, n)
        w = wdim.get(n, 0)
        rows.append({"level": n, "verma_dim": total, "submodule_dim": w,
                     "quotient_dim": total - w})
    return rows


@dataclass
class ClassificationVerdict:
    module: VermaModule
    case: str  # "i" | "ii" | "iii" | "iv"
    M: int | None
    dimension: int | None  # None means infinite
    per_level: list[dict]
    quotient_irreducible_checked: bool = False

    def to_json(self) -> dict:
        out = {"kind": self.module.kind, "r": format_rational(self.module.r)}
        if self.module.lam is not None:
            out["lambda"] = format_rational(self.module.lam)
        out["case"] = self.case
        if self.M is not None:
            out["M"] = self.M
        out["dimension"] = self.dimension if self.dimension is not None else "infinite"
        out["per_level"] = self.per_level
        return out


def _quotient_has_no_singular(module: VermaModule, spans: dict[int, tuple],
                              n: int) -> bool:
    """Kernel of the lowering pair on the level-n quotient is zero."""
    kets = list(enumerate_level(module, n).kets)
    cur = spans.get(n)
    pivots_n = cur[1] if cur else []
    rr_n = cur[0] if cur else []
    comp = [i for i in range(len(kets)) if i not in pivots_n]
    if not comp:
        return True  # quotient level already empty
    below = list(enumerate_level(module, n - 1).kets)
    prev = spans.get(n - 1)
    rr_b = prev[0] if prev else []
    pivots_b = prev[1] if prev else []
    comp_b = [i for i in range(len(below)) if i not in pivots_b]
    rows = [[Fraction(0)] * len(comp) for _ in range(2 * len(comp_b))]
    for col, i in enumerate(comp):
        vec = Vector(module, {kets[i]: Fraction(1)})
        for block, gen in enumerate(("am", "atm")):
            red = linalg.reduce_mod_span(rr_b, pivots_b,
                                         act(gen, vec).coords(below))
            for rowpos, j in enumerate(comp_b):
                rows[block * len(comp_b) + rowpos][col] = red[j]
    return not linalg.nullspace(rows, len(comp))


def classify_module(module: VermaModule, max_level: int | None = None,
                    detect_cap: int = 32) -> ClassificationVerdict:
    """Classification verdict for the irreducible lowest-weight quotient.

    Cases: (i) the one-parameter Verma module is already irreducible,
    (ii) it truncates to total dimension (2M+1)^2, (iii) the two-parameter
    Verma module is irreducible, (iv) it has an infinite-dimensional quotient
    of constant per-level dimension.  "Infinite" means the per-level table is
    verified non-terminating up to the level cap.
    """
    orders = detect_singular_orders(module, detect_cap)
    if module.kind == "Mr":
        case = "ii" if orders else "i"
    else:
        case = "iv" if orders else "iii"
    M = orders[0] if orders else None
    if max_level is None:
        if case == "ii":
            max_level = 2 * (2 * M + 1)
        elif case == "iv":
            max_level = 2 * M + 1 + 8
        else:
            max_level = 16
    per_level = quotient_dims(module, max_level, exact=True)
    dimension = None
    checked = False
    if case == "ii":
        support = 4 * M + 1
        if max_level < support + 1:
            per_level = quotient_dims(module, support + 1, exact=True)
        total = sum(row["quotient_dim"] for row in per_level)
        if total != (2 * M + 1) ** 2:
            raise ConsistencyError(
                f"quotient total {total} != {(2 * M + 1) ** 2}")
        if any(row["quotient_dim"] for row in per_level if row["level"] > support):
            raise ConsistencyError("quotient persists beyond its support")
        dimension = (2 * M + 1) ** 2
        spans = submodule_span_dims(module, max(row["level"] for row in per_level),
                                    orders)
        checked = all(_quotient_has_no_singular(module, spans, n)
                      for n in range(1, support + 1))
        if not checked:
            raise ConsistencyError("quotient contains an unexpected singular vector")
    elif case == "iv":
        # two constraint orders can coexist (integer r); the quotient then
        # terminates.  Two consecutive empty levels end it for good, since
        # raising weights are at most 2.
        quots = [row["quotient_dim"] for row in per_level]
        if len(quots) >= 2 and quots[-1] == quots[-2] == 0:
            dimension = sum(quots)
            top = max(row["level"] for row in per_level if row["quotient_dim"])
            spans = submodule_span_dims(module, top + 1, orders)
            checked = all(_quotient_has_no_singular(module, spans, n)
                          for n in range(1, top + 2))
    return ClassificationVerdict(module, case, M, dimension, per_level, checked)
