"""
Integer kernels for orbit enumeration over F_p^4.

Points are encoded as ``((a1*p + a2)*p + a3)*p + a4``.  Each generator of
B(F_p) acts on n as a 4x4 matrix mod p, so its action on all points is a
permutation array; these are stacked into an ``(n_gen, p**4)`` table.

``orbit_labels`` assigns each point the smallest index in its orbit.  The
BFS kernel is compiled with numba when available; setting
``ORBITKIT_DISABLE_NUMBA=1`` (or running without numba) selects a pure-numpy
label-propagation fallback.  Both return identical arrays.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_DISABLED = os.environ.get("ORBITKIT_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")
HAVE_NUMBA = numba is not None


def encode(coords: np.ndarray, p: int) -> np.ndarray:
    c = coords.astype(np.int64)
    return ((c[..., 0] * p + c[..., 1]) * p + c[..., 2]) * p + c[..., 3]


def decode(index: np.ndarray, p: int) -> np.ndarray:
    index = np.asarray(index, dtype=np.int64)
    out = np.empty(index.shape + (4,), dtype=np.int64)
    rest = index
    for k in (3, 2, 1, 0):
        out[..., k] = rest % p
        rest = rest // p
    return out


def all_points(p: int) -> np.ndarray:
    """(p**4, 4) array of coordinates, row i decoding to index i."""
    return decode(np.arange(p**4, dtype=np.int64), p)


def permutation_table(mats: np.ndarray, p: int) -> np.ndarray:
    """Images of every point under each 4x4 matrix (acting on column vectors)."""
    pts = all_points(p)
    table = np.empty((len(mats), p**4), dtype=np.int64)
    for g, m in enumerate(mats):
        images = (pts @ np.asarray(m, dtype=np.int64).T) % p
        table[g] = encode(images, p)
    return table


def _bfs_labels(perms):
    n_gen, n = perms.shape
    labels = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = start
        queue[0] = start
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for g in range(n_gen):
                w = perms[g, u]
                if labels[w] < 0:
                    labels[w] = start
                    queue[tail] = w
                    tail += 1
    return labels


if HAVE_NUMBA:
    orbit_labels_numba = numba.njit(cache=True)(_bfs_labels)
else:  # pragma: no cover
    orbit_labels_numba = None


def orbit_labels_numpy(perms: np.ndarray) -> np.ndarray:
    """Min-label propagation along both directions of every permutation."""
    perms = np.asarray(perms, dtype=np.int64)
    n = perms.shape[1]
    inverses = np.empty_like(perms)
    idx = np.arange(n, dtype=np.int64)
    for g in range(len(perms)):
        inverses[g, perms[g]] = idx
    labels = idx.copy()
    while True:
        old = labels
        for g in range(len(perms)):
            labels = np.minimum(labels, labels[perms[g]])
            labels = np.minimum(labels, labels[inverses[g]])
        # labels[i] <= i and shares i's orbit, so jumping is safe
        labels = labels[labels]
        if np.array_equal(labels, old):
            return labels


def backend_name(backend: str | None = None) -> str:
    if backend is None:
        return "numba" if HAVE_NUMBA and not NUMBA_DISABLED else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    return backend


def orbit_labels(perms: np.ndarray, backend: str | None = None) -> np.ndarray:
    if backend_name(backend) == "numba":
        return orbit_labels_numba(np.ascontiguousarray(perms, dtype=np.int64))
    return orbit_labels_numpy(perms)
