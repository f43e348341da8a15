"""The exact degree-2 commutative algebra of an even frame-doubled root lattice.

Basis of the algebra attached to a root lattice R of rank l: the l(l+1)/2
symmetric Heisenberg quadratics plus one vector per root pair {a, -a}.
Elements are stored as an integer symmetric ambient matrix (the quadratic
part, in stored lattice coordinates) plus an integer vector over root pairs,
over a common positive denominator.  All products, bilinear forms and kernels
are exact; numpy is used only as an integer container.

Structure constants (s2 = metric divisor of stored coordinates):
  quad x quad:   2(AB + BA)/s2
  quad x pair p: (2 r_p A r_p / s2^2) pair_p
  pair x pair:   same pair -> 2 r r^T;  pairs at angle +-1 -> the sum/difference
                 pair with trivial sign; orthogonal pairs -> 0.
The chosen two-cocycle is identically +1: on a doubled root lattice all
inner products are even, so the bimultiplicative recipe collapses to the
trivial cocycle and every structure constant above is sign-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .rootlat import Mod2Class, RootLattice

DIM_GUARD = 512
_INT_GUARD = 1 << 62


class GriessError(ValueError):
    pass


class GriessElement:
    """An element: symmetric matrix `cart` + pair vector `xv`, over `den`."""

    __slots__ = ("alg", "cart", "xv", "den")

    def __init__(self, alg: "GriessAlgebra", cart: np.ndarray, xv: np.ndarray,
                 den: int, _normalized: bool = False):
        self.alg = alg
        if _normalized:
            self.cart, self.xv, self.den = cart, xv, den
            return
        if den < 0:
            cart, xv, den = -cart, -xv, -den
        g = int(np.gcd.reduce(np.concatenate(
            [cart.ravel(), xv, np.array([den], dtype=np.int64)])))
        g = g or 1
        self.cart = (cart // g).astype(np.int64)
        self.xv = (xv // g).astype(np.int64)
        self.den = den // g
        hi = max(int(np.abs(self.cart).max(initial=0)),
                 int(np.abs(self.xv).max(initial=0)), self.den)
        if hi >= _INT_GUARD:
            raise GriessError("integer overflow guard tripped")

    # -- linear structure ---------------------------------------------------
    def __add__(self, other: "GriessElement") -> "GriessElement":
        d = lcm(self.den, other.den)
        return GriessElement(self.alg,
                             self.cart * (d // self.den) + other.cart * (d // other.den),
                             self.xv * (d // self.den) + other.xv * (d // other.den), d)

    def __sub__(self, other: "GriessElement") -> "GriessElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GriessElement":
        f = Fraction(scalar)
        return GriessElement(self.alg, self.cart * f.numerator, self.xv * f.numerator,
                             self.den * f.denominator)

    def __neg__(self) -> "GriessElement":
        return -1 * self

    # -- algebra ------------------------------------------------------------
    def __mul__(self, other: "GriessElement") -> "GriessElement":
        return self.alg.product(self, other)

    def inner(self, other: "GriessElement") -> Fraction:
        return self.alg.inner(self, other)

    def is_zero(self) -> bool:
        return not self.cart.any() and not self.xv.any()

    def key(self) -> tuple:
        return (self.den, self.cart.tobytes(), self.xv.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, GriessElement) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def coords(self) -> list[Fraction]:
        """Exact coordinates over the labeled basis (quadratics then pairs)."""
        return self.alg.expand(self)

    def to_json(self) -> dict:
        return {"basis": self.alg.basis_labels(),
                "coords": [str(c) for c in self.coords()]}


@dataclass(frozen=True)
class ConformalVector:
    """An idempotent-of-weight-2 element with its central charge 2<e,e>."""

    element: GriessElement
    central_charge: Fraction

    @staticmethod
    def checked(e: GriessElement) -> "ConformalVector":
        if not (e * e == 2 * e):
            raise GriessError("element does not square to twice itself")
        return ConformalVector(e, 2 * e.inner(e))


class GriessAlgebra:
    """Product and bilinear-form tables for the degree-2 algebra over R."""

    def __init__(self, lattice: RootLattice):
        self.lattice = lattice
        m, s2 = lattice.ambient, lattice.scale_sq
        self.m, self.s2 = m, s2
        self.pairs = lattice.pairs
        self.npairs = lattice.npairs
        self.dimension = lattice.rank * (lattice.rank + 1) // 2 + self.npairs
        if self.dimension > DIM_GUARD:
            raise GriessError(f"dimension {self.dimension} exceeds guard {DIM_GUARD}")
        P = self.pairs
        # ordered pair-products landing on another pair: (p, q) -> r
        dots = (P @ P.T) // s2
        tp, tq = np.nonzero(np.abs(dots) == 1)
        targets = np.empty(len(tp), dtype=np.int64)
        for k, (p, q) in enumerate(zip(tp.tolist(), tq.tolist())):
            v = P[p] - dots[p, q] * P[q]
            targets[k] = lattice.pair_of(v)
        self._tp, self._tq, self._tr = tp, tq, targets
        self._pair_outer = np.einsum("pi,pj->pij", P, P)
        self.omega = self._build_omega()
        self._sym_solver = None
        self._commutant_cache: dict[tuple, list[list[Fraction]]] = {}

    def __repr__(self) -> str:
        return f"GriessAlgebra({self.lattice.name}, dim={self.dimension})"

    # -- constructors ---------------------------------------------------------
    def zero(self) -> GriessElement:
        return GriessElement(self, np.zeros((self.m, self.m), dtype=np.int64),
                             np.zeros(self.npairs, dtype=np.int64), 1)

    def from_quadratic(self, u, v) -> GriessElement:
        """The element u_(-1)v_(-1)1 for stored lattice vectors u, v."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        return GriessElement(self, np.outer(u, v) + np.outer(v, u),
                             np.zeros(self.npairs, dtype=np.int64), 2)

    def pair_element(self, p: int) -> GriessElement:
        xv = np.zeros(self.npairs, dtype=np.int64)
        xv[p] = 1
        return GriessElement(self, np.zeros((self.m, self.m), dtype=np.int64), xv, 1)

    def _build_omega(self) -> GriessElement:
        # omega = (s2/2) * projection onto the root span, as an exact matrix
        basis = self.lattice.basis
        sol = _rational_inverse(basis @ basis.T)
        num, den = sol
        proj_num = basis.T @ num @ basis  # projection * den
        cart = self.s2 * proj_num
        return GriessElement(self, cart.astype(np.int64),
                             np.zeros(self.npairs, dtype=np.int64), 2 * den)

    def w_vector(self, root_or_pair, sign: int) -> ConformalVector:
        """The frame vector (1/8) a a + (sign/4) pair over a root a."""
        if sign not in (1, -1):
            raise GriessError("sign must be +1 or -1")
        p = root_or_pair if isinstance(root_or_pair, int) \
            else self.lattice.pair_of(root_or_pair)
        r = self.pairs[p]
        cart = np.outer(r, r)
        xv = np.zeros(self.npairs, dtype=np.int64)
        xv[p] = 2 * sign
        e = GriessElement(self, cart, xv, 8)
        return ConformalVector(e, Fraction(1, 2))

    def _sum_pairs(self, pair_indices) -> GriessElement:
        xv = np.zeros(self.npairs, dtype=np.int64)
        xv[list(pair_indices)] = 1
        return GriessElement(self, np.zeros((self.m, self.m), dtype=np.int64), xv, 1)

    def conformal_wtilde(self) -> ConformalVector:
        """(2/(h+2)) omega + (1/(h+2)) * sum of all pair vectors."""
        h = self.lattice.coxeter_number
        e = Fraction(2, h + 2) * self.omega + \
            Fraction(1, h + 2) * self._sum_pairs(range(self.npairs))
        ell = self.lattice.rank
        return ConformalVector(e, Fraction(2 * ell, h + 2))

    def conformal_s(self) -> ConformalVector:
        h = self.lattice.coxeter_number
        e = Fraction(h, h + 2) * self.omega - \
            Fraction(1, h + 2) * self._sum_pairs(range(self.npairs))
        ell = self.lattice.rank
        return ConformalVector(e, Fraction(ell * h, h + 2))

    def sublattice_conformal_pair(self, sub_roots) -> tuple[ConformalVector, ConformalVector]:
        """(s, wtilde) of an embedded indecomposable root sublattice."""
        sub = np.array([np.asarray(r, dtype=np.int64) for r in sub_roots])
        sub_basis = _row_basis(sub)
        rank = len(sub_basis)
        h = len(sub) // rank
        num, den = _rational_inverse(sub_basis @ sub_basis.T)
        proj_num = sub_basis.T @ num @ sub_basis
        omega_sub = GriessElement(self, (self.s2 * proj_num).astype(np.int64),
                                  np.zeros(self.npairs, dtype=np.int64), 2 * den)
        pair_ids = sorted({self.lattice.pair_of(r) for r in sub})
        pair_sum = self._sum_pairs(pair_ids)
        s = Fraction(h, h + 2) * omega_sub - Fraction(1, h + 2) * pair_sum
        wt = Fraction(2, h + 2) * omega_sub + Fraction(1, h + 2) * pair_sum
        return (ConformalVector(s, Fraction(rank * h, h + 2)),
                ConformalVector(wt, Fraction(2 * rank, h + 2)))

    def wtilde_on_sublattice(self, sub_roots) -> ConformalVector:
        """conformal_wtilde of an embedded root sublattice, inside this algebra."""
        return self.sublattice_conformal_pair(sub_roots)[1]

    # -- products and forms ---------------------------------------------------
    def product(self, a: GriessElement, b: GriessElement) -> GriessElement:
        s2 = self.s2
        P = self.pairs
        cart = 2 * s2 * (a.cart @ b.cart + b.cart @ a.cart)
        w = a.xv * b.xv
        if w.any():
            cart = cart + 2 * s2 * s2 * np.einsum("p,pij->ij", w, self._pair_outer)
        xv = np.zeros(self.npairs, dtype=np.int64)
        if a.cart.any() and b.xv.any():
            quad = 2 * np.einsum("pi,ij,pj->p", P, a.cart, P)
            xv += quad * b.xv
        if b.cart.any() and a.xv.any():
            quad = 2 * np.einsum("pi,ij,pj->p", P, b.cart, P)
            xv += quad * a.xv
        if a.xv.any() and b.xv.any():
            contrib = s2 * s2 * a.xv[self._tp] * b.xv[self._tq]
            np.add.at(xv, self._tr, contrib)
        return GriessElement(self, cart, xv, a.den * b.den * s2 * s2)

    def inner(self, a: GriessElement, b: GriessElement) -> Fraction:
        s4 = self.s2 * self.s2
        num = 2 * int(np.trace(a.cart @ b.cart)) + 2 * s4 * int(a.xv @ b.xv)
        return Fraction(num, s4 * a.den * b.den)

    # -- twist automorphisms ----------------------------------------------------
    def twist_signs(self, x) -> np.ndarray:
        """Signs (-1)^<x, a_p> over pairs, for a lattice vector or coset x."""
        if isinstance(x, Mod2Class):
            x = x.representative
        x = np.asarray(x, dtype=np.int64)
        dots = (self.pairs @ x)
        if (dots % self.s2).any():
            raise GriessError("twist argument pairs non-integrally with roots")
        return np.where((dots // self.s2) % 2 == 0, 1, -1).astype(np.int64)

    def phi_twist(self, x, v: GriessElement) -> GriessElement:
        """Sign-flip automorphism: fixes quadratics, scales pair p by (-1)^<x,a_p>."""
        if v.alg is not self:
            raise GriessError("element belongs to a different algebra")
        if not (self.lattice.kind == "E" and self.lattice.rank == 8):
            raise GriessError("twist automorphisms require a rank-8 E-type lattice")
        return GriessElement(self, v.cart.copy(), v.xv * self.twist_signs(x), v.den)

    # -- sigma rule -------------------------------------------------------------
    def sigma_image(self, e: GriessElement, f: GriessElement) -> GriessElement:
        """Involution attached to e, applied to f (both norm-1/4 idempotents)."""
        if e == f:
            return f
        ip = self.inner(e, f)
        if ip == 0:
            return f
        if ip != Fraction(1, 32):
            raise GriessError(f"inner product {ip} admits no involution rule")
        g = e + f - 4 * (e * f)
        if 2 * self.inner(g, g) != Fraction(1, 2):
            raise GriessError("sigma image is not a central-charge-1/2 candidate")
        return g

    # -- basis bookkeeping --------------------------------------------------------
    def basis_labels(self) -> list[str]:
        labels = []
        ell = self.lattice.rank
        for i in range(ell):
            for j in range(i, ell):
                labels.append(f"quad:{i},{j}")
        for p in range(self.npairs):
            labels.append("pair:" + ",".join(map(str, self.pairs[p].tolist())))
        return labels

    def _solver(self):
        """Expansion of symmetric matrices over the quadratic basis b_i b_j."""
        if self._sym_solver is not None:
            return self._sym_solver
        basis = self.lattice.basis
        ell = self.lattice.rank
        cols = []
        labels = []
        for i in range(ell):
            for j in range(i, ell):
                mat = np.outer(basis[i], basis[j]) + np.outer(basis[j], basis[i])
                cols.append(mat[np.triu_indices(self.m)])
                labels.append((i, j))
        A = [[Fraction(int(c[k]), 2) for c in cols]
             for k in range(len(cols[0]))]
        self._sym_solver = (_fraction_pseudo_solve(A), labels)
        return self._sym_solver

    def expand(self, v: GriessElement) -> list[Fraction]:
        solver, _ = self._solver()
        target = v.cart[np.triu_indices(self.m)]
        rhs = [Fraction(int(x), v.den) for x in target]
        quad_coords = solver(rhs)
        return quad_coords + [Fraction(int(x), v.den) for x in v.xv]

    # -- kernels -------------------------------------------------------------------
    def commutant_weight2(self, u: GriessElement) -> list[list[Fraction]]:
        """Echelon basis of ker(v -> u * v), coordinates over the labeled basis."""
        ck = u.key()
        if ck in self._commutant_cache:
            return self._commutant_cache[ck]
        basis_elems = self._basis_elements()
        cols = [self.expand(self.product(u, b)) for b in basis_elems]
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]
        kern = _echelonize(_rational_kernel(mat))
        self._commutant_cache[ck] = kern
        return kern

    def _basis_elements(self) -> list[GriessElement]:
        basis = self.lattice.basis
        out = []
        ell = self.lattice.rank
        for i in range(ell):
            for j in range(i, ell):
                out.append(self.from_quadratic(basis[i], basis[j]))
        for p in range(self.npairs):
            out.append(self.pair_element(p))
        return out

    def in_span(self, v: GriessElement, echelon: list[list[Fraction]]) -> bool:
        """Membership of v in the row space of an echelon kernel basis."""
        vec = self.expand(v)
        for row in echelon:
            piv = next(i for i, x in enumerate(row) if x != 0)
            if vec[piv] != 0:
                f = vec[piv] / row[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return all(x == 0 for x in vec)


def _row_basis(rows: np.ndarray) -> np.ndarray:
    from .rootlat import _hnf_basis
    return _hnf_basis(rows)


def _rational_inverse(mat: np.ndarray) -> tuple[np.ndarray, int]:
    """Inverse of a symmetric positive definite integer matrix as (num, den)."""
    n = len(mat)
    aug = [[Fraction(int(mat[i, j])) for j in range(n)] +
           [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    entries = [row[n:] for row in aug]
    den = lcm(*[x.denominator for row in entries for x in row])
    num = np.array([[int(x * den) for x in row] for row in entries], dtype=np.int64)
    return num, den


def _fraction_pseudo_solve(A):
    """Left-inverse application for a full-column-rank Fraction matrix A."""
    rows, cols = len(A), len(A[0])
    work = [list(r) + [Fraction(int(i == j)) for j in range(rows)]
            for i, r in enumerate(A)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if piv is None:
            raise GriessError("quadratic basis is rank-deficient")
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == cols:
            break
    lift = [row[cols:] for row in work[:cols]]

    def solve(rhs):
        coords = [sum(lift[i][j] * rhs[j] for j in range(rows) if rhs[j] != 0)
                  for i in range(cols)]
        # consistency: A @ coords must reproduce rhs
        for j in range(rows):
            s = sum(A[j][i] * coords[i] for i in range(cols) if coords[i] != 0)
            if s != rhs[j]:
                raise GriessError("quadratic part lies outside the root span")
        return coords

    return solve


def _echelonize(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced echelon form with first-nonzero-column pivoting; drops zero rows."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    out: list[list[Fraction]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
    return [row for row in work if any(x != 0 for x in row)]


def _rational_kernel(mat) -> list[list[Fraction]]:
    """Deterministic echelon basis of the kernel of a square Fraction matrix."""
    rows = len(mat)
    cols = len(mat[0])
    work = [list(r) for r in mat]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    kern = []
    for fc in free_cols:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for pr, pc in pivots:
            vec[pc] = -work[pr][fc]
        kern.append(vec)
    return kern


def verify_twist_chain(algebra: GriessAlgebra, alpha0) -> dict:
    """Exact identity checks tying wtilde, its root twist and the frame vector.

    Requires a rank-8 E-type algebra.  Returns a report with one boolean per
    identity: the quarter-sum product rule, the embedded rank-7 wtilde
    expression with its central charge, and idempotency of every ingredient.
    """
    a0 = np.asarray(alpha0, dtype=np.int64)
    lat = algebra.lattice
    wt = algebra.conformal_wtilde().element
    phiwt = algebra.phi_twist(a0, wt)
    wplus = algebra.w_vector(lat.pair_of(a0), 1).element
    perp = [r for r in lat.roots if int(np.dot(r, a0)) == 0]
    s_sub, wt_sub = algebra.sublattice_conformal_pair(perp)
    report = {
        "product_rule": wt * phiwt == Fraction(1, 4) * (wt + phiwt - wplus),
        "embedded_wtilde": wt_sub.element ==
            Fraction(4, 5) * (wt + phiwt) - Fraction(1, 5) * wplus,
        "embedded_central_charge": wt_sub.central_charge == Fraction(7, 10),
        "twist_inner": phiwt.inner(wt) == Fraction(1, 32),
        "twist_idempotent": phiwt * phiwt == 2 * phiwt,
    }
    report["ok"] = all(report.values())
    return report


def verify_orthogonal_split(algebra: GriessAlgebra, a5_roots, a1_root) -> dict:
    """Exact checks for the rank-6 orthogonal decomposition of omega.

    Splits omega into the sublattice s-vector, two conformal vectors of
    central charges 25/28 and 1/2 built from the rank-1 summand, and wtilde.
    """
    lat = algebra.lattice
    wt6 = algebra.conformal_wtilde().element
    s_a5, wt_a5 = algebra.sublattice_conformal_pair(a5_roots)
    p1 = lat.pair_of(np.asarray(a1_root, dtype=np.int64))
    omega1 = wt_a5.element + algebra.w_vector(p1, 1).element - wt6
    omega2 = algebra.w_vector(p1, -1).element
    report = {
        "omega1_idempotent": omega1 * omega1 == 2 * omega1,
        "omega1_charge": 2 * omega1.inner(omega1) == Fraction(25, 28),
        "omega2_charge": 2 * omega2.inner(omega2) == Fraction(1, 2),
        "orthogonal": (omega1 * omega2).is_zero() and omega1.inner(omega2) == 0,
        "sum_is_omega":
            s_a5.element + omega1 + omega2 + wt6 == algebra.omega,
    }
    report["ok"] = all(report.values())
    return report
