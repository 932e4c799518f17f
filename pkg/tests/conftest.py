from __future__ import annotations

import random

import numpy as np
import pytest

from bundlesig import linalg
from bundlesig.symplectic import transvection_vec

_CRITERIA: dict[int, list[tuple[str, str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, text = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        note = ""
        if rep.skipped and isinstance(rep.longrepr, tuple):
            note = rep.longrepr[2].removeprefix("Skipped: ")
        _CRITERIA.setdefault(n, []).append((text, status, note))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        for text, status, note in _CRITERIA[n]:
            extra = f" ({note})" if note else ""
            terminalreporter.write_line(f"criterion {n}: {status}: {text}{extra}")


# -- shared helpers ------------------------------------------------------------


def random_vector(rng: random.Random, g: int, span: int = 2) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-span, span) for _ in range(2 * g))
        if any(v):
            return v


def random_symplectic(rng: random.Random, g: int, length: int | None = None) -> linalg.Matrix:
    """A product of a few random transvections."""
    m = linalg.identity(2 * g)
    for _ in range(rng.randint(1, 4) if length is None else length):
        m = linalg.mul(m, transvection_vec(random_vector(rng, g), rng.choice((1, -1))))
    return m


def float_tau(A, B) -> int:
    """Meyer's cocycle in floating point: SVD null space and eigenvalue signs."""
    A = np.array(A, dtype=float)
    B = np.array(B, dtype=float)
    n = A.shape[0]
    g = n // 2
    J = np.zeros((n, n))
    J[:g, g:] = -np.eye(g)
    J[g:, :g] = np.eye(g)
    I = np.eye(n)
    M = np.hstack([np.linalg.inv(A) - I, B - I])
    _, s, vt = np.linalg.svd(M)
    rank = int((s > 1e-9).sum())
    V = vt[rank:].T
    if V.shape[1] == 0:
        return 0
    X, Y = V[:n], V[n:]
    G = (X + Y).T @ J @ (I - B) @ Y
    G = (G + G.T) / 2
    ev = np.linalg.eigvalsh(G)
    tol = 1e-8 * max(1.0, np.abs(ev).max())
    return int((ev > tol).sum() - (ev < -tol).sum())


def float_inertia(G) -> tuple[int, int, int]:
    ev = np.linalg.eigvalsh(np.array(G, dtype=float))
    tol = 1e-9 * max(1.0, np.abs(ev).max()) if len(ev) else 0
    pos, neg = int((ev > tol).sum()), int((ev < -tol).sum())
    return pos, neg, len(ev) - pos - neg
