import os
import logging
import warnings
from typing import Optional

import numpy as np

from ..core.configuration import Configuration
from ..utils.errors import VectorFileError

logger = logging.getLogger(__name__)


def read_rows(path: str) -> np.ndarray:
    """
    Parse a vector file into an array with one vector per row.

    Lines starting with '#' are comments; every other line holds the same
    number of whitespace-separated decimals.

    Raises:
        VectorFileError: On unreadable files, ragged rows or non-numeric fields.
    """
    if not os.path.isfile(path):
        raise VectorFileError(f"Vector file not found: {path}")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)  # empty-file warning
            rows = np.loadtxt(path, comments="#", ndmin=2, dtype=np.float64)
    except (OSError, ValueError) as e:
        raise VectorFileError(f"Cannot parse vector file {path}: {e}") from e
    if rows.size == 0:
        raise VectorFileError(f"Vector file {path} holds no vectors")
    return rows


def load_vectors(path: str, label: Optional[str] = None) -> Configuration:
    """Read a configuration; norms within 1e-6 of 1 are renormalized, others rejected."""
    rows = read_rows(path)
    logger.info(f"Loaded {rows.shape[0]} vectors in R^{rows.shape[1]} from {path}")
    return Configuration.from_rows(rows, label=label or f"file:{path}")


def save_vectors(path: str, rows: np.ndarray, header: str = "") -> str:
    """Write one vector per row with 17 significant digits; header lines become comments."""
    rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    np.savetxt(path, rows, fmt="%.17g", header=header, comments="# ")
    return path
