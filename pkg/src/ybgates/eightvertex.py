"""The eight-vertex braid matrix family and its unitary extensions.

With all eight anti-diagonal-block weights non-vanishing and the reduction
w1 = w2 = w5 = w6, w3 = -w4 = +-w1, w3^2 + w7*w8 = 0 applied, the braid
matrix collapses (after fixing the overall scale w1 = 1) to

    b_s(q) = [[ 1,    0, 0, q ],
              [ 0,    1, s, 0 ],
              [ 0,   -s, 1, 0 ],
              [ -1/q, 0, 0, 1 ]]        s = +1 or -1,

with eigenvalues 1-i and 1+i. Baxterizing and normalizing gives a unitary
one-parameter family exactly when x is real and |q| = 1; writing
q = exp(-i*phi) and x = tan(theta) gives the equivalent angle form
cos(theta) * b(phi) + sin(theta) * b(phi)^(-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import inverse
from .yangbaxter import yang_baxterize

SQRT2 = math.sqrt(2.0)

# The two eigenvalues shared by every member of the family; their product
# is the Baxterization coefficient 2.
EIGENVALUES = (1.0 - 1.0j, 1.0 + 1.0j)


class ZeroDeformationError(ValueError):
    """The deformation parameter q must be non-zero."""


def sign_value(sign: str) -> float:
    """Map the family label '+' or '-' to the sign of the inner block."""
    if sign == "+":
        return 1.0
    if sign == "-":
        return -1.0
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class EightVertexWeights:
    """The eight non-vanishing vertex weights w1..w8."""

    w1: complex
    w2: complex
    w3: complex
    w4: complex
    w5: complex
    w6: complex
    w7: complex
    w8: complex

    def to_matrix(self) -> np.ndarray:
        """Arrange the weights in the anti-diagonal-block pattern."""
        return np.array(
            [
                [self.w1, 0, 0, self.w7],
                [0, self.w5, self.w3, 0],
                [0, self.w4, self.w6, 0],
                [self.w8, 0, 0, self.w2],
            ],
            dtype=complex,
        )


def check_constraints(w: EightVertexWeights) -> list[float]:
    """Residuals of the braid-solution constraints on the weights.

    Returns six values: |w1-w2|, |w1-w5|, |w1-w6|, |w1^2-w3^2|,
    |w1^2-w4^2|, |w3^2 + w7*w8|. All six vanish exactly on the reduced
    family that build_b constructs.
    """
    return [
        abs(w.w1 - w.w2),
        abs(w.w1 - w.w5),
        abs(w.w1 - w.w6),
        abs(w.w1**2 - w.w3**2),
        abs(w.w1**2 - w.w4**2),
        abs(w.w3**2 + w.w7 * w.w8),
    ]


def build_b(sign: str, q: complex) -> np.ndarray:
    """Unnormalized braid matrix b_s(q) with overall scale w1 = 1."""
    if q == 0:
        raise ZeroDeformationError("deformation parameter q must be non-zero")
    s = sign_value(sign)
    return np.array(
        [
            [1, 0, 0, q],
            [0, 1, s, 0],
            [0, -s, 1, 0],
            [-1.0 / q, 0, 0, 1],
        ],
        dtype=complex,
    )


def build_b_phi(sign: str, phi: float) -> np.ndarray:
    """Unitary braid matrix build_b(sign, exp(-i*phi)) / sqrt(2)."""
    return build_b(sign, np.exp(-1j * phi)) / SQRT2


def build_R_x(sign: str, q: complex, x: float) -> np.ndarray:
    """Baxterized family b + 2x * b^(-1); entries follow 1+x and q(1-x)."""
    return yang_baxterize(build_b(sign, q), EIGENVALUES, x)


def rho(x: float) -> float:
    """Squared normalization (1+x)^2 + (1-x)^2 = 2(1 + x^2) for real x."""
    return (1.0 + x) ** 2 + (1.0 - x) ** 2


def build_R_x_normalized(sign: str, phi: float, x: float) -> np.ndarray:
    """Unitary spectral family build_R_x(sign, exp(-i*phi), x) / sqrt(rho)."""
    return build_R_x(sign, np.exp(-1j * phi), x) / math.sqrt(rho(x))


def build_R_theta(sign: str, phi: float, theta: float) -> np.ndarray:
    """Angle form cos(theta) b(phi) + sin(theta) b(phi)^(-1); unitary."""
    b = build_b_phi(sign, phi)
    return math.cos(theta) * b + math.sin(theta) * inverse(b)


def theta_from_x(x: float) -> float:
    """Angle equivalent of a real spectral value: arctan(x) in (-pi/2, pi/2)."""
    return math.atan(x)
