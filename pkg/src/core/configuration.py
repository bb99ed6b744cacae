from dataclasses import dataclass, field
from typing import Dict, Any, Sequence

import numpy as np

from ..config.tolerances import ToleranceMixin
from ..utils.errors import InvalidConfigurationError


@dataclass(slots=True, eq=False)
class Configuration(ToleranceMixin):
    """N unit vectors in R^d, stored as the columns of a d x N array."""
    vectors: np.ndarray
    label: str = field(default="")

    def __post_init__(self):
        """Validate shape, finiteness and unit norms; freeze the array."""
        vectors = np.array(self.vectors, dtype=np.float64)
        if vectors.ndim == 1:
            vectors = vectors.reshape(1, -1)
        if vectors.ndim != 2 or vectors.shape[0] < 1 or vectors.shape[1] < 1:
            raise InvalidConfigurationError(f"Expected a non-empty d x N array, got shape {vectors.shape}")
        if not np.all(np.isfinite(vectors)):
            raise InvalidConfigurationError("Configuration has non-finite coordinates")
        norms = np.linalg.norm(vectors, axis=0)
        worst = float(np.max(np.abs(norms - 1.0)))
        if worst > self.UNIT_NORM_TOL:
            raise InvalidConfigurationError(
                f"Vector {int(np.argmax(np.abs(norms - 1.0)))} has norm {norms[np.argmax(np.abs(norms - 1.0))]:.12g}; "
                f"unit norm required within {self.UNIT_NORM_TOL:.0e}"
            )
        vectors.setflags(write=False)
        self.vectors = vectors

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], label: str = "") -> "Configuration":
        """
        Build a configuration from one vector per row, as read from a file.

        Norms inside [1 - LOAD_RENORM_BAND, 1 + LOAD_RENORM_BAND] are renormalized
        silently; anything further from 1 is rejected.
        """
        rows = np.atleast_2d(np.array(rows, dtype=np.float64))
        norms = np.linalg.norm(rows, axis=1)
        bad = np.abs(norms - 1.0) > cls.LOAD_RENORM_BAND
        if np.any(bad):
            index = int(np.argmax(bad))
            raise InvalidConfigurationError(f"Vector {index} has norm {norms[index]:.12g}, outside the unit band")
        return cls((rows / norms[:, None]).T, label=label)

    @classmethod
    def from_columns(cls, columns: np.ndarray, label: str = "") -> "Configuration":
        """Normalize arbitrary nonzero columns onto the sphere."""
        columns = np.array(columns, dtype=np.float64)
        return cls(columns / np.linalg.norm(columns, axis=0), label=label)

    @property
    def d(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def N(self) -> int:
        return int(self.vectors.shape[1])

    def rows(self) -> np.ndarray:
        """Vectors as rows (N x d), the layout of the vector file format."""
        return self.vectors.T.copy()

    def vector(self, i: int) -> np.ndarray:
        return self.vectors[:, i]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "N": self.N,
            "label": self.label,
            "vectors": self.rows().tolist(),
        }

    def __repr__(self) -> str:
        return f"Configuration(d={self.d}, N={self.N}, label={self.label!r})"

    def __eq__(self, other):
        """Equal when the coordinate arrays are identical."""
        if isinstance(other, Configuration):
            return self.vectors.shape == other.vectors.shape and bool(np.array_equal(self.vectors, other.vectors))
        return False

    __hash__ = None


@dataclass(slots=True, eq=False)
class GramMatrix(ToleranceMixin):
    """Symmetric N x N matrix with unit diagonal (inner products A_ij)."""
    entries: np.ndarray

    def __post_init__(self):
        """Ensuring that the entries form a symmetric unit-diagonal matrix."""
        entries = np.array(self.entries, dtype=np.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidConfigurationError(f"Gram matrix must be square, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise InvalidConfigurationError("Gram matrix has non-finite entries")
        if np.max(np.abs(entries - entries.T), initial=0.0) > self.GRAM_DIAG_TOL:
            raise InvalidConfigurationError("Gram matrix is not symmetric")
        if np.max(np.abs(np.diag(entries) - 1.0), initial=0.0) > self.GRAM_DIAG_TOL:
            raise InvalidConfigurationError("Gram matrix diagonal is not 1")
        entries = 0.5 * (entries + entries.T)
        np.fill_diagonal(entries, 1.0)
        entries.setflags(write=False)
        self.entries = entries

    @property
    def N(self) -> int:
        return int(self.entries.shape[0])

    def off_diagonal(self) -> np.ndarray:
        """Entries A_ij with i != j, in row-major order."""
        mask = ~np.eye(self.N, dtype=bool)
        return self.entries[mask]

    def to_dict(self) -> Dict[str, Any]:
        return {"N": self.N, "entries": self.entries.tolist()}

    def __repr__(self) -> str:
        return f"GramMatrix(N={self.N})"

    def __eq__(self, other):
        if isinstance(other, GramMatrix):
            return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))
        return False

    __hash__ = None


def as_matrix(A) -> np.ndarray:
    """Plain ndarray view of a GramMatrix or array-like."""
    if isinstance(A, GramMatrix):
        return A.entries
    return np.asarray(A, dtype=np.float64)
