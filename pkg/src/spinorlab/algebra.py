"""Real Clifford algebra of spacetime, Cl(1,3), with metric diag(+,-,-,-).

Multivectors are stored as 16 coefficients over the canonical basis, ordered
grade-major and lexicographically within each grade:

    1;  e0 e1 e2 e3;  e01 e02 e03 e12 e13 e23;  e012 e013 e023 e123;  e0123

The full product structure is generated once from the metric by counting
index transpositions, so every operation (geometric product, wedge, left
contraction, involutions) is table-driven.  Coefficients may be real or
complex; complex coefficients give the complexified algebra.
"""

from __future__ import annotations

import itertools
import numbers

import numpy as np

METRIC_SIGNS = (1, -1, -1, -1)

BLADES: tuple[tuple[int, ...], ...] = tuple(
    idx for k in range(5) for idx in itertools.combinations(range(4), k)
)
BLADE_INDEX: dict[tuple[int, ...], int] = {idx: n for n, idx in enumerate(BLADES)}
BLADE_GRADES = np.array([len(idx) for idx in BLADES])
BLADE_NAMES = tuple(
    "1" if not idx else "e" + "".join(str(i) for i in idx) for idx in BLADES
)
DIM = len(BLADES)

GRADE_2_PAIRS = tuple(idx for idx in BLADES if len(idx) == 2)


def _multiply_basis(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Product of two basis blades: (sign, sorted index tuple)."""
    seq = list(a + b)
    sign = 1
    # bubble sort; each transposition of distinct generators flips the sign
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                swapped = True
    out: list[int] = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and seq[i] == seq[i + 1]:
            sign *= METRIC_SIGNS[seq[i]]
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return sign, tuple(out)


def _build_tables() -> tuple[np.ndarray, np.ndarray]:
    index = np.zeros((DIM, DIM), dtype=np.intp)
    sign = np.zeros((DIM, DIM))
    for i, a in enumerate(BLADES):
        for j, b in enumerate(BLADES):
            s, idx = _multiply_basis(a, b)
            index[i, j] = BLADE_INDEX[idx]
            sign[i, j] = s
    return index, sign


PRODUCT_INDEX, PRODUCT_SIGN = _build_tables()

_GRADE_OUT = BLADE_GRADES[PRODUCT_INDEX]
_GA = BLADE_GRADES[:, None]
_GB = BLADE_GRADES[None, :]
# outer product keeps grade r+s terms; left contraction keeps grade s-r terms
WEDGE_SIGN = np.where(_GRADE_OUT == _GA + _GB, PRODUCT_SIGN, 0.0)
LCONTRACT_SIGN = np.where(_GRADE_OUT == _GB - _GA, PRODUCT_SIGN, 0.0)

REVERSE_SIGN = np.array([(-1) ** (k * (k - 1) // 2) for k in BLADE_GRADES])
INVOLUTE_SIGN = np.array([(-1) ** k for k in BLADE_GRADES])


def _product(x: np.ndarray, y: np.ndarray, table: np.ndarray) -> np.ndarray:
    terms = np.outer(x, y) * table
    out = np.zeros(DIM, dtype=terms.dtype)
    np.add.at(out, PRODUCT_INDEX.ravel(), terms.ravel())
    return out


class Multivector:
    """Element of Cl(1,3) (or its complexification), 16 basis coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        arr = np.asarray(coeffs)
        if arr.shape != (DIM,):
            raise ValueError(f"expected {DIM} coefficients, got shape {arr.shape}")
        if not np.issubdtype(arr.dtype, np.number):
            raise TypeError(f"coefficients must be numeric, got dtype {arr.dtype}")
        dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
        self.coeffs = arr.astype(dtype)

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Multivector":
        return cls(np.zeros(DIM))

    @classmethod
    def scalar(cls, value) -> "Multivector":
        c = np.zeros(DIM, dtype=np.complex128 if isinstance(value, complex) else np.float64)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, *indices: int, coeff=1.0) -> "Multivector":
        key = tuple(indices)
        if key not in BLADE_INDEX:
            raise ValueError(f"no basis blade with index tuple {key}")
        c = np.zeros(DIM, dtype=np.complex128 if isinstance(coeff, complex) else np.float64)
        c[BLADE_INDEX[key]] = coeff
        return cls(c)

    @classmethod
    def vector(cls, components) -> "Multivector":
        comp = np.asarray(components)
        if comp.shape != (4,):
            raise ValueError("a 1-vector needs 4 components")
        c = np.zeros(DIM, dtype=np.complex128 if np.iscomplexobj(comp) else np.float64)
        c[1:5] = comp
        return cls(c)

    # ---- basic queries -------------------------------------------------

    def __repr__(self) -> str:
        parts = [
            f"{self.coeffs[i]:+g}*{BLADE_NAMES[i]}"
            for i in range(DIM)
            if self.coeffs[i] != 0
        ]
        return "Multivector(" + (" ".join(parts) if parts else "0") + ")"

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.coeffs)

    @property
    def real(self) -> "Multivector":
        return Multivector(self.coeffs.real)

    @property
    def imag(self) -> "Multivector":
        return Multivector(self.coeffs.imag)

    def scalar_part(self):
        return self.coeffs[0]

    def grade(self, k: int) -> "Multivector":
        out = np.where(BLADE_GRADES == k, self.coeffs, 0)
        return Multivector(out)

    def grades(self, tol: float = 0.0) -> tuple[int, ...]:
        present = sorted({int(BLADE_GRADES[i]) for i in range(DIM) if abs(self.coeffs[i]) > tol})
        return tuple(present)

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.linalg.norm(self.coeffs))

    def conjugate(self) -> "Multivector":
        return Multivector(self.coeffs.conj())

    def reverse(self) -> "Multivector":
        return Multivector(self.coeffs * REVERSE_SIGN)

    def involute(self) -> "Multivector":
        return Multivector(self.coeffs * INVOLUTE_SIGN)

    def vector_components(self) -> np.ndarray:
        return self.coeffs[1:5].copy()

    # ---- arithmetic ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Multivector) and bool(np.array_equal(self.coeffs, other.coeffs))

    def __add__(self, other) -> "Multivector":
        if isinstance(other, numbers.Number):
            other = Multivector.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other) -> "Multivector":
        if isinstance(other, numbers.Number):
            other = Multivector.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self.coeffs - other.coeffs)

    def __rsub__(self, other) -> "Multivector":
        if isinstance(other, numbers.Number):
            return Multivector.scalar(other) - self
        return NotImplemented

    def __neg__(self) -> "Multivector":
        return Multivector(-self.coeffs)

    def __mul__(self, other) -> "Multivector":
        if isinstance(other, numbers.Number):
            return Multivector(self.coeffs * other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(_product(self.coeffs, other.coeffs, PRODUCT_SIGN))

    def __rmul__(self, other) -> "Multivector":
        if isinstance(other, numbers.Number):
            return Multivector(self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other) -> "Multivector":
        if isinstance(other, numbers.Number):
            return Multivector(self.coeffs / other)
        return NotImplemented


def geometric(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return Multivector(_product(a.coeffs, b.coeffs, WEDGE_SIGN))


def lcontract(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction a ⌟ b (lowers grade; a inside b)."""
    return Multivector(_product(a.coeffs, b.coeffs, LCONTRACT_SIGN))


def scalar_product(a: Multivector, b: Multivector):
    """Metric pairing <reverse(a) b>_0."""
    return (a.reverse() * b).scalar_part()


def basis_vectors() -> tuple[Multivector, Multivector, Multivector, Multivector]:
    return tuple(Multivector.blade(i) for i in range(4))


E0, E1, E2, E3 = basis_vectors()
PSEUDOSCALAR = Multivector.blade(0, 1, 2, 3)


# ---- quaternions ----------------------------------------------------------
#
# The even subalgebra of the spatial rotations is spanned by 1 and the unit
# bivectors i = e23, j = e31 = -e13, k = e12, which multiply like Hamilton's
# quaternions (ij = k).


class Quaternion:
    """Hamilton quaternion w + x i + y j + z k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w: float = 0.0, x: float = 0.0, y: float = 0.0, z: float = 0.0) -> None:
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    def __repr__(self) -> str:
        return f"Quaternion({self.w:g}, {self.x:g}, {self.y:g}, {self.z:g})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quaternion)
            and (self.w, self.x, self.y, self.z) == (other.w, other.x, other.y, other.z)
        )

    def components(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> float:
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def to_multivector(self) -> Multivector:
        c = np.zeros(DIM)
        c[0] = self.w
        c[BLADE_INDEX[(2, 3)]] = self.x
        c[BLADE_INDEX[(1, 3)]] = -self.y  # j = e31 = -e13
        c[BLADE_INDEX[(1, 2)]] = self.z
        return Multivector(c)

    @classmethod
    def from_multivector(cls, mv: Multivector, tol: float = 1e-12) -> "Quaternion":
        if mv.is_complex:
            raise ValueError("quaternions embed only the real algebra")
        keep = {0, BLADE_INDEX[(2, 3)], BLADE_INDEX[(1, 3)], BLADE_INDEX[(1, 2)]}
        stray = [i for i in range(DIM) if i not in keep and abs(mv.coeffs[i]) > tol]
        if stray:
            names = ", ".join(BLADE_NAMES[i] for i in stray)
            raise ValueError(f"multivector has support outside the quaternion subalgebra: {names}")
        return cls(
            mv.coeffs[0],
            mv.coeffs[BLADE_INDEX[(2, 3)]],
            -mv.coeffs[BLADE_INDEX[(1, 3)]],
            mv.coeffs[BLADE_INDEX[(1, 2)]],
        )


QUAT_I = Quaternion(0, 1, 0, 0)
QUAT_J = Quaternion(0, 0, 1, 0)
QUAT_K = Quaternion(0, 0, 0, 1)
