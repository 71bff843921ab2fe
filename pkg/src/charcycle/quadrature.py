"""Gauss-Legendre panel rules shared by the pairing integrals.

All rules return flat arrays of nodes and weights so the callers can
evaluate integrands in one vectorized sweep.
"""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def gauss_legendre(n: int):
    """Nodes and weights on [-1, 1], cached per degree."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def panel_rule(a: float, b: float, n: int):
    """Gauss rule of degree n mapped to the interval [a, b]."""
    x, w = gauss_legendre(n)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def panels_rule(breaks, n: int):
    """Composite Gauss rule over consecutive intervals of `breaks`."""
    xs, ws = [], []
    for a, b in zip(breaks[:-1], breaks[1:]):
        x, w = panel_rule(a, b, n)
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)


def dyadic_breaks(r0: float, rmax: float):
    """Breakpoints 0, r0, 2*r0, 4*r0, ... clipped at rmax."""
    breaks = [0.0]
    r = r0
    while r < rmax:
        breaks.append(r)
        r *= 2.0
    breaks.append(rmax)
    return breaks


def tensor_rule(rules):
    """Tensor product of 1-d (nodes, weights) pairs.

    Returns nodes of shape (N, d) and weights of shape (N,).
    """
    grids = np.meshgrid(*[r[0] for r in rules], indexing="ij")
    wgrids = np.meshgrid(*[r[1] for r in rules], indexing="ij")
    nodes = np.stack([g.ravel() for g in grids], axis=-1)
    weights = np.ones(nodes.shape[0])
    for wg in wgrids:
        weights = weights * wg.ravel()
    return nodes, weights


def box_rule(box, n: int):
    """Tensor Gauss rule of degree n per axis over a d-dimensional box."""
    return tensor_rule([panel_rule(a, b, n) for a, b in box])


def adaptive_box_rule(box, n: int, needs_split=None, max_depth: int = 8):
    """Tensor Gauss rule with dyadic refinement toward flagged regions.

    `needs_split(lo, hi)` decides whether a cell (given by corner arrays)
    still straddles the singular set; flagged cells are bisected along every
    axis until `max_depth`.  Cells at the maximum depth are integrated with
    the plain Gauss rule (the singularity must be integrable).
    """
    box = [(float(a), float(b)) for a, b in box]
    cells = [(box, 0)]
    nodes_parts, weight_parts = [], []
    while cells:
        cell, depth = cells.pop()
        lo = np.array([c[0] for c in cell])
        hi = np.array([c[1] for c in cell])
        if needs_split is not None and depth < max_depth and needs_split(lo, hi):
            mid = 0.5 * (lo + hi)
            d = len(cell)
            for mask in range(2 ** d):
                sub = []
                for axis in range(d):
                    if (mask >> axis) & 1:
                        sub.append((mid[axis], hi[axis]))
                    else:
                        sub.append((lo[axis], mid[axis]))
                cells.append((sub, depth + 1))
            continue
        nd, wt = box_rule(cell, n)
        nodes_parts.append(nd)
        weight_parts.append(wt)
    return np.concatenate(nodes_parts), np.concatenate(weight_parts)
