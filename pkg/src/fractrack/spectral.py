"""Neumann eigenbasis of A = a*d2/dx2 + c on (0, L) and region operators.

Eigenpairs are closed-form: lambda_k = -a*(k*pi/L)^2 + c with constant mode
xi_0 = 1/sqrt(L) and xi_k = sqrt(2/L)*cos(k*pi*x/L).  The basis carries a
fixed composite Gauss-Legendre rule for projections; the region Gram matrix
G_{jk} = integral_omega xi_j xi_k dx uses closed-form cosine integrals, so
quadrature enters only through projections (and test oracles).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_GL_NODES_PER_CELL = 8
_GL_CELLS = 64


def _composite_gauss_legendre(a: float, b: float, cells: int = _GL_CELLS,
                              nodes_per_cell: int = _GL_NODES_PER_CELL):
    """Composite Gauss-Legendre nodes/weights on [a, b]."""
    xg, wg = np.polynomial.legendre.leggauss(nodes_per_cell)
    edges = np.linspace(a, b, cells + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
    weights = (half[:, None] * wg[None, :]).ravel()
    return nodes, weights


@dataclass(frozen=True)
class Region:
    """Sub-interval [left, right] of the spatial domain with positive length."""

    left: float
    right: float

    def __post_init__(self):
        if not (0.0 <= self.left < self.right) or not np.isfinite(self.right):
            raise ValueError(
                f"region must satisfy 0 <= left < right, got [{self.left}, {self.right}]"
            )

    @property
    def length(self) -> float:
        return self.right - self.left


@dataclass(frozen=True)
class SpectralBasis:
    """Truncated Neumann eigenbasis of a*d2/dx2 + c on (0, L).

    The adjoint eigenvalues are stored separately but constrained equal to
    the primal ones; only the self-adjoint path is supported.
    """

    diffusivity: float
    reaction: float
    length: float
    n_modes: int
    eigenvalues: np.ndarray = field(repr=False)
    adjoint_eigenvalues: np.ndarray = field(repr=False)
    quad_nodes: np.ndarray = field(repr=False)
    quad_weights: np.ndarray = field(repr=False)
    self_adjoint: bool = True

    def eigenfunction_matrix(self, points: np.ndarray) -> np.ndarray:
        """xi_k(x) for k = 0..n_modes-1 at the given points, shape (n_modes, len(points))."""
        x = np.asarray(points, dtype=float)
        k = np.arange(self.n_modes)[:, None]
        vals = np.sqrt(2.0 / self.length) * np.cos(k * np.pi * x[None, :] / self.length)
        vals[0, :] = 1.0 / np.sqrt(self.length)
        return vals


def build_basis(a: float, c: float, L: float, n_modes: int) -> SpectralBasis:
    """Construct the truncated basis; eigenvalues follow -a*(k*pi/L)^2 + c."""
    if not (a > 0.0) or not np.isfinite(a):
        raise ValueError(f"diffusivity must be > 0, got {a}")
    if not (L > 0.0) or not np.isfinite(L):
        raise ValueError(f"length must be > 0, got {L}")
    if not isinstance(n_modes, (int, np.integer)) or n_modes < 1:
        raise ValueError(f"n_modes must be an integer >= 1, got {n_modes}")
    if not np.isfinite(c):
        raise ValueError(f"reaction must be finite, got {c}")
    k = np.arange(n_modes, dtype=float)
    lam = -a * (k * np.pi / L) ** 2 + c
    nodes, weights = _composite_gauss_legendre(0.0, L)
    return SpectralBasis(
        diffusivity=float(a),
        reaction=float(c),
        length=float(L),
        n_modes=int(n_modes),
        eigenvalues=lam,
        adjoint_eigenvalues=lam.copy(),
        quad_nodes=nodes,
        quad_weights=weights,
    )


@dataclass
class SpectralField:
    """A spatial function represented by coefficients in the owning basis."""

    basis: SpectralBasis
    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=float)
        if self.coefficients.shape != (self.basis.n_modes,):
            raise ValueError(
                f"coefficient length {self.coefficients.shape} does not match "
                f"n_modes={self.basis.n_modes}"
            )


def project(f, basis: SpectralBasis) -> SpectralField:
    """Project a callable f(x) onto the basis: coeff_k = integral_0^L f * xi_k dx."""
    fvals = np.asarray(f(basis.quad_nodes), dtype=float)
    xi = basis.eigenfunction_matrix(basis.quad_nodes)
    coeffs = xi @ (basis.quad_weights * fvals)
    return SpectralField(basis=basis, coefficients=coeffs)


def synthesize(field: SpectralField, points) -> np.ndarray:
    """Evaluate sum_k coeff_k * xi_k(x) at the given points (must lie in [0, L])."""
    x = np.asarray(points, dtype=float)
    if x.size and (x.min() < 0.0 or x.max() > field.basis.length):
        raise ValueError("synthesis points must lie inside [0, L]")
    xi = field.basis.eigenfunction_matrix(x)
    return field.coefficients @ xi


def region_quadrature(region: Region, basis: SpectralBasis):
    """Composite Gauss-Legendre rule restricted to the region (for projections onto omega)."""
    if region.right > basis.length:
        raise ValueError(
            f"region [{region.left}, {region.right}] exceeds the domain length {basis.length}"
        )
    return _composite_gauss_legendre(region.left, region.right)


def project_region(f, region: Region, basis: SpectralBasis) -> SpectralField:
    """Coefficients of the zero-extension chi*_omega f: coeff_k = integral_omega f * xi_k dx."""
    nodes, weights = region_quadrature(region, basis)
    fvals = np.asarray(f(nodes), dtype=float)
    xi = basis.eigenfunction_matrix(nodes)
    return SpectralField(basis=basis, coefficients=xi @ (weights * fvals))


def region_gram(region: Region, basis: SpectralBasis) -> np.ndarray:
    """Gram matrix G_{jk} = integral_omega xi_j xi_k dx from closed-form cosine integrals.

    G realizes p_omega = chi*_omega chi_omega in modal coordinates; it is
    symmetric positive semidefinite with spectrum in [0, 1].
    """
    if region.right > basis.length:
        raise ValueError(
            f"region [{region.left}, {region.right}] exceeds the domain length {basis.length}"
        )
    L = basis.length
    m = basis.n_modes
    l, r = region.left, region.right

    def s(n: int) -> float:
        # integral_l^r cos(n*pi*x/L) dx
        if n == 0:
            return r - l
        w = n * np.pi / L
        return (np.sin(w * r) - np.sin(w * l)) / w

    G = np.empty((m, m))
    G[0, 0] = (r - l) / L
    for k in range(1, m):
        G[0, k] = G[k, 0] = np.sqrt(2.0) / L * s(k)
    for j in range(1, m):
        for k in range(j, m):
            G[j, k] = G[k, j] = (s(j - k) + s(j + k)) / L
    return 0.5 * (G + G.T)


def apply_p_omega(field: SpectralField, gram: np.ndarray) -> SpectralField:
    """Apply the region projection p_omega in modal coordinates (G @ coefficients)."""
    gram = np.asarray(gram)
    if gram.shape != (field.basis.n_modes, field.basis.n_modes):
        raise ValueError(
            f"Gram matrix shape {gram.shape} does not match n_modes={field.basis.n_modes}"
        )
    return SpectralField(basis=field.basis, coefficients=gram @ field.coefficients)


def region_l2_norm(field: SpectralField, gram: np.ndarray) -> float:
    """L2 norm of the field restricted to the region: sqrt(c^T G c)."""
    gram = np.asarray(gram)
    c = field.coefficients
    if gram.shape != (c.size, c.size):
        raise ValueError(f"Gram matrix shape {gram.shape} does not match coefficients ({c.size})")
    q = float(c @ (gram @ c))
    if q < -1e-12 * max(1.0, float(c @ c)):
        raise ArithmeticError(f"region quadratic form is negative beyond round-off: {q}")
    return np.sqrt(max(q, 0.0))
