"""Kippenhahn polynomial of a matrix and its spectral geometry.

For A = H + iK with Hermitian H, K the associated polynomial is

    p_A(x, y, z) = det(x H + y K + z I),

homogeneous of degree n with real coefficients and monic in z.  The dual
curve of p_A = 0 generates the numerical range: W(A) is the convex hull
of the curve's real affine points.  Two independent routes to p_A live
here.  `kipp_poly_det` samples determinants of the pencil on a
deterministic grid and recovers coefficients by least squares; it works
for any square A up to degree 12.  `kipp_poly_expanded` is a closed-form
expansion special to 5x5 upper-triangular input, organised by the cycle
structure of the permutations in the determinant.  The two are developed
independently so each can serve as an oracle for the other.

Also here: support function, eigenvalue slices of the pencil in a given
direction, boundary sampling, and the entry-product sums that the
closed-form expansion and the factorization conditions share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import BadDims, IllConditionedInterpolation, NotDim5, NotUpperTriangular
from .homopoly import HomoPoly3, dict_add, dict_mul, dict_scale, prune
from .linalg import as_matrix, hermitian_parts

MAX_DEGREE = 12  # coefficient-count guard for the determinant fit

# --- determinant-sampling route ---


def _sample_grid(n: int) -> tuple[np.ndarray, np.ndarray]:
    # circles of several radii with golden-offset angles; radii stay near 1
    # so the Vandermonde stays well conditioned through degree 12
    nrad = max(3, n // 2 + 2)
    nang = 2 * n + 3
    radii = np.geomspace(0.75, 4.0 / 3.0, nrad)
    ang = 2.0 * np.pi * (np.arange(nang) + 0.381966) / nang
    xs = np.concatenate([r * np.cos(ang) for r in radii])
    ys = np.concatenate([r * np.sin(ang) for r in radii])
    return xs, ys


def kipp_poly_det(a) -> HomoPoly3:
    """det(x H + y K + z I) recovered from determinant samples.

    The pencil is evaluated on a fixed grid in the z = 1 chart after
    rescaling A to unit size (the polynomial rescales monomial-wise, so
    nothing is lost), and the dehomogenized coefficients come from one
    least-squares solve.  Raises IllConditionedInterpolation when the fit
    residual or the monic-in-z check fails.
    """
    m = as_matrix(a)
    n = m.shape[0]
    if n > MAX_DEGREE:
        raise BadDims(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    h, k = hermitian_parts(m)
    tau = max(1.0, float(np.linalg.norm(h, 2)), float(np.linalg.norm(k, 2)))
    hs, ks = h / tau, k / tau

    xs, ys = _sample_grid(n)
    pencil = xs[:, None, None] * hs + ys[:, None, None] * ks + np.eye(n)
    dets = np.linalg.det(pencil).real  # Hermitian pencil, imaginary part is roundoff

    monos = [(i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i)]
    vand = np.stack([xs**i * ys**j for (i, j, _) in monos], axis=1)
    coef, *_ = np.linalg.lstsq(vand, dets, rcond=None)

    resid = float(np.max(np.abs(vand @ coef - dets)))
    if resid > 1e-8 * float(np.max(np.abs(dets))):
        raise IllConditionedInterpolation(f"determinant fit residual {resid:.3e}")
    czn = coef[monos.index((0, 0, n))]
    if abs(czn - 1.0) > 1e-12:
        raise IllConditionedInterpolation(f"z^{n} coefficient {czn!r} is not 1")
    coef = coef / czn

    coeffs = {}
    for (i, j, kz), c in zip(monos, coef):
        val = float(c) * tau ** (i + j)  # undo the input rescaling
        if val != 0.0:
            coeffs[(i, j, kz)] = val
    coeffs[(0, 0, n)] = 1.0
    return HomoPoly3(n, coeffs)


# --- shared entry-product sums for 5x5 upper-triangular matrices ---

_N = 5


def _check_upper_5x5(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != _N:
        raise NotDim5(f"need a 5x5 matrix, got {m.shape[0]}x{m.shape[0]}")
    lower = np.tril(m, -1)
    if np.max(np.abs(lower)) > 1e-12 * max(1.0, float(np.max(np.abs(m)))):
        raise NotUpperTriangular("entries below the diagonal must vanish")
    return m


def upper_entries(t: np.ndarray) -> dict:
    """Strictly upper entries keyed by index pair (i, j), i < j."""
    return {(i, j): complex(t[i, j]) for i in range(_N) for j in range(i + 1, _N)}


def triple_product(a: dict, k: int, l: int, m: int) -> complex:
    """Cyclic product a_kl a_lm conj(a_km) for k < l < m."""
    return a[(k, l)] * a[(l, m)] * np.conj(a[(k, m)])


def quad_product(a: dict, j: int, k: int, l: int, m: int) -> complex:
    """Chain product a_jk a_kl a_lm conj(a_jm) for j < k < l < m."""
    return a[(j, k)] * a[(k, l)] * a[(l, m)] * np.conj(a[(j, m)])


def five_product(a: dict) -> complex:
    """Full chain a_12 a_23 a_34 a_45 conj(a_15) in 1-based labelling."""
    return a[(0, 1)] * a[(1, 2)] * a[(2, 3)] * a[(3, 4)] * np.conj(a[(0, 4)])


def p_scalars(a: dict) -> list[float]:
    """For each index i, the 4-index invariant of the complementary entries.

    Three pair-partition modulus terms minus twice the real parts of the
    two crossing 4-cycles of the complement; one term per unordered
    pattern (counting each conjugate pair once).
    """
    out = []
    for i in range(_N):
        w1, w2, w3, w4 = sorted(set(range(_N)) - {i})
        pairs = (
            abs(a[(w1, w2)]) ** 2 * abs(a[(w3, w4)]) ** 2
            + abs(a[(w1, w3)]) ** 2 * abs(a[(w2, w4)]) ** 2
            + abs(a[(w1, w4)]) ** 2 * abs(a[(w2, w3)]) ** 2
        )
        cyc_a = a[(w1, w2)] * a[(w2, w4)] * np.conj(a[(w1, w3)]) * np.conj(a[(w3, w4)])
        cyc_b = a[(w1, w4)] * a[(w2, w3)] * np.conj(a[(w1, w3)]) * np.conj(a[(w2, w4)])
        out.append(float(pairs - 2.0 * cyc_a.real - 2.0 * cyc_b.real))
    return out


# index families, enumerated once; sizes are pinned by the tests
PART_32 = [(t, tuple(sorted(set(range(_N)) - set(t)))) for t in combinations(range(_N), 3)]
PART_23 = [(p, t) for (t, p) in PART_32]
PART_14 = [((i,), tuple(sorted(set(range(_N)) - {i}))) for i in range(_N)]

# 5-cycle inverse pairs beyond the monotone chain, split by descent pattern:
# FAM6 indexes (i, j, k, l, m) with i<j<k<l and i<m<l,
# FAM7 indexes (i, j, k, l, m) with i<j<k, l<m, i<m, l<k.
FAM6 = [
    p
    for p in permutations(range(_N))
    if p[0] < p[1] < p[2] < p[3] and p[0] < p[4] < p[3]
]
FAM7 = [
    p
    for p in permutations(range(_N))
    if p[0] < p[1] < p[2] and p[3] < p[4] and p[0] < p[4] and p[3] < p[2]
]


def fam6_product(a: dict, idx: tuple) -> complex:
    i, j, k, l, m = idx
    return a[(i, j)] * a[(j, k)] * a[(k, l)] * np.conj(a[(i, m)]) * np.conj(a[(m, l)])


def fam7_product(a: dict, idx: tuple) -> complex:
    i, j, k, l, m = idx
    return a[(i, j)] * a[(j, k)] * a[(l, m)] * np.conj(a[(i, m)]) * np.conj(a[(l, k)])


# --- closed-form route for 5x5 upper-triangular matrices ---

_E4 = {(2, 0, 0): 0.25, (0, 2, 0): 0.25}  # (x^2 + y^2) / 4


def _lin(lam: complex) -> dict:
    return {(1, 0, 0): float(lam.real), (0, 1, 0): float(lam.imag), (0, 0, 1): 1.0}


def _xy(w: complex) -> dict:
    # x Re w + y Im w
    return {(1, 0, 0): float(w.real), (0, 1, 0): float(w.imag)}


def _quad_form(w: complex) -> dict:
    # (x^2 - y^2)/2 Re w + x y Im w
    return {
        (2, 0, 0): 0.5 * float(w.real),
        (0, 2, 0): -0.5 * float(w.real),
        (1, 1, 0): float(w.imag),
    }


def kipp_poly_expanded(a) -> HomoPoly3:
    """Closed-form p_A for 5x5 upper-triangular A.

    Writing L_i = (Re lam_i) x + (Im lam_i) y + z for the diagonal entries,
    the determinant expands as prod L_i minus (x^2+y^2)/4 times a cubic
    correction Q collecting the non-identity permutations by cycle type:
    transpositions, 3-cycles, (2,2)- and 4-cycle patterns paired with the
    leftover linear factors, and the 5-cycle families weighted by pure
    (x, y) forms.  All sums run over the index families enumerated above.
    """
    t = _check_upper_5x5(a)
    lam = np.diag(t)
    ent = upper_entries(t)
    lins = [_lin(lam[i]) for i in range(_N)]
    pis = p_scalars(ent)

    q: dict = {}

    # transpositions against a leftover linear triple
    for (i, j, k), (l, m) in PART_32:
        block = dict_mul(dict_mul(lins[i], lins[j]), lins[k])
        q = dict_add(q, block, abs(ent[(l, m)]) ** 2)

    # 3-cycles against a leftover linear pair
    for (i, j), (k, l, m) in PART_23:
        block = dict_mul(_xy(triple_product(ent, k, l, m)), dict_mul(lins[i], lins[j]))
        q = dict_add(q, block, -1.0)

    # (2,2)-patterns and crossing 4-cycles of a fixed complement
    for i in range(_N):
        q = dict_add(q, dict_mul(_E4, lins[i]), -pis[i])

    # monotone 4-cycles against one leftover linear factor
    for (i,), (j, k, l, m) in PART_14:
        q = dict_add(q, dict_mul(lins[i], _quad_form(quad_product(ent, j, k, l, m))))

    # 3-cycle times the modulus of the complementary transposition
    for (i, j), (k, l, m) in PART_23:
        block = dict_mul(_E4, _xy(triple_product(ent, k, l, m)))
        q = dict_add(q, block, abs(ent[(i, j)]) ** 2)

    # non-monotone 5-cycles, grouped by descent pattern
    for idx in FAM6:
        q = dict_add(q, dict_mul(_E4, _xy(fam6_product(ent, idx))), -1.0)
    for idx in FAM7:
        q = dict_add(q, dict_mul(_E4, _xy(fam7_product(ent, idx))), -1.0)

    # the monotone 5-cycle carries a cubic harmonic weight
    w5 = five_product(ent)
    q = dict_add(
        q,
        {
            (3, 0, 0): float(w5.real),
            (1, 2, 0): -3.0 * float(w5.real),
            (2, 1, 0): 3.0 * float(w5.imag),
            (0, 3, 0): -float(w5.imag),
        },
        -0.25,
    )

    prod = {(0, 0, 0): 1.0}
    for i in range(_N):
        prod = dict_mul(prod, lins[i])
    full = dict_add(prod, dict_mul(_E4, q), -1.0)
    return HomoPoly3(_N, prune(full))


# --- spectral geometry of the pencil ---


def _direction_matrix(h: np.ndarray, k: np.ndarray, theta: float) -> np.ndarray:
    return np.cos(theta) * h + np.sin(theta) * k


def support_function(a, theta: float) -> float:
    """Largest eigenvalue of Re(e^{-i theta} A); the support of W(A) at angle theta."""
    h, k = hermitian_parts(a)
    return float(np.linalg.eigvalsh(_direction_matrix(h, k, theta))[-1])


DEGENERATE_GAP = 1e-7


@dataclass(frozen=True)
class SpectralSlice:
    """Eigenstructure of cos(theta) H + sin(theta) K in one direction.

    curve_points holds the complex points u* A u over the eigenvectors u;
    these are the tangency points of the supporting lines orthogonal to
    theta.  degenerate is set when two eigenvalues nearly collide, which
    feeds flat-portion detection downstream.
    """

    theta: float
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    curve_points: np.ndarray
    degenerate: bool


def spectral_slice(a, theta: float) -> SpectralSlice:
    m = as_matrix(a)
    h, k = hermitian_parts(m)
    vals, vecs = np.linalg.eigh(_direction_matrix(h, k, theta))
    pts = np.einsum("ik,ij,jk->k", vecs.conj(), m, vecs)
    gaps = np.diff(vals)
    degen = bool(gaps.size and float(np.min(gaps)) < DEGENERATE_GAP)
    return SpectralSlice(float(theta), vals, vecs, pts, degen)


def boundary_polyline(a, samples: int = 256) -> np.ndarray:
    """Boundary points of W(A): tangency point of the top eigenvector per angle."""
    m = as_matrix(a)
    h, k = hermitian_parts(m)
    out = np.empty(samples, dtype=complex)
    for idx, theta in enumerate(np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)):
        _, vecs = np.linalg.eigh(_direction_matrix(h, k, theta))
        top = vecs[:, -1]
        out[idx] = complex(top.conj() @ m @ top)
    return out


def curve_points(a, samples: int = 256) -> list[SpectralSlice]:
    """Full sweep of spectral slices over [0, 2 pi)."""
    return [
        spectral_slice(a, theta)
        for theta in np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    ]
