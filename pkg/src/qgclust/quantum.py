"""Two-qubit entangled game engine.

Strategy operators are 2x2 complex unitaries; game states are 4-amplitude
vectors on the basis |00>, |01>, |10>, |11> with the row player's qubit
first.  States are only ever compared through outcome probabilities, so
global phase never matters.
"""

from __future__ import annotations

import numpy as np

_UNITARY_ATOL = 1e-12

_I2 = np.eye(2, dtype=complex)
_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
_KET00 = np.array([1, 0, 0, 0], dtype=complex)


def strategy_h() -> np.ndarray:
    """Hadamard move."""
    return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def strategy_c() -> np.ndarray:
    """Cooperate: the identity."""
    return np.eye(2, dtype=complex)


def strategy_d() -> np.ndarray:
    """Defect: [[0,1],[-1,0]]."""
    return np.array([[0, 1], [-1, 0]], dtype=complex)


def strategy_f(rho: float) -> np.ndarray:
    """Strength-parameterized generalized Hadamard move.

    [[sqrt(rho), sqrt(1-rho)], [sqrt(1-rho), -sqrt(rho)]]; recovers the
    plain Hadamard at rho = 0.5.
    """
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    a = np.sqrt(rho)
    b = np.sqrt(1.0 - rho)
    return np.array([[a, b], [b, -a]], dtype=complex)


def is_unitary(u: np.ndarray, atol: float = _UNITARY_ATOL) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        return False
    return bool(np.max(np.abs(u @ u.conj().T - _I2)) < atol)


def entangler(gamma: float) -> np.ndarray:
    """J(gamma) = cos(gamma/2) I(x)I + i sin(gamma/2) sigma_x(x)sigma_x.

    gamma in [0, pi/2]; gamma = pi/2 gives the maximally entangled game.
    """
    if not 0.0 <= gamma <= np.pi / 2 + 1e-12:
        raise ValueError(f"gamma must lie in [0, pi/2], got {gamma}")
    return np.cos(gamma / 2) * np.kron(_I2, _I2) + 1j * np.sin(gamma / 2) * np.kron(
        _SIGMA_X, _SIGMA_X
    )


def final_state(y1: np.ndarray, y2: np.ndarray, gamma: float = np.pi / 2) -> np.ndarray:
    """J^dag (Y1 (x) Y2) J |00>, as 4 complex amplitudes."""
    if not is_unitary(y1, atol=1e-9) or not is_unitary(y2, atol=1e-9):
        raise ValueError("strategy operators must be 2x2 unitaries")
    j = entangler(gamma)
    return j.conj().T @ np.kron(np.asarray(y1, complex), np.asarray(y2, complex)) @ j @ _KET00


def outcome_probabilities(state: np.ndarray) -> np.ndarray:
    """Measurement probabilities over |00>, |01>, |10>, |11>."""
    return np.abs(np.asarray(state, dtype=complex)) ** 2


def closed_form_case1(opponent_defects: bool) -> np.ndarray:
    """Outcome probabilities for the mutual-Hadamard game.

    Mutual H (x) H gives (1/4, 1/4, 1/4, 1/4); H (x) D gives (1/2, 1/2, 0, 0).
    """
    if opponent_defects:
        return np.array([0.5, 0.5, 0.0, 0.0])
    return np.array([0.25, 0.25, 0.25, 0.25])


def closed_form_case2(rho1: float, rho2: float, opponent_defects: bool) -> np.ndarray:
    """Outcome probabilities for the generalized-Hadamard game.

    rho1 is the mover's outgoing link strength, rho2 the opponent's.
    Mutual F: (r1 r2, r2(1-r1), r1(1-r2), (1-r1)(1-r2)); F (x) D: (1-r1, r1, 0, 0).
    """
    if not 0.0 <= rho1 <= 1.0 or not 0.0 <= rho2 <= 1.0:
        raise ValueError("rho1 and rho2 must lie in [0, 1]")
    if opponent_defects:
        return np.array([1.0 - rho1, rho1, 0.0, 0.0])
    return np.array(
        [
            rho1 * rho2,
            rho2 * (1.0 - rho1),
            rho1 * (1.0 - rho2),
            (1.0 - rho1) * (1.0 - rho2),
        ]
    )
