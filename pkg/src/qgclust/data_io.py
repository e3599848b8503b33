"""Dataset ingestion and preprocessing, plus the run configuration record."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .dynamics import ConvergenceConfig, LrrKind
from .game import PayoffKind, StrategyCase


@dataclass(frozen=True)
class Dataset:
    points: np.ndarray  # n x m, NaN marks a missing cell
    labels: np.ndarray | None = None
    name: str = ""
    preset_clusters: int = 1

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def m(self) -> int:
        return self.points.shape[1]

    def has_missing(self) -> bool:
        return bool(np.isnan(self.points).any())


@dataclass(frozen=True)
class RunConfig:
    k: int
    strategy_case: StrategyCase = StrategyCase.CASE1
    payoff: PayoffKind = PayoffKind.PD_LIKE
    beta: float = 0.2
    lrr: LrrKind = LrrKind.L1
    sigma: float = 1.0
    convergence: ConvergenceConfig = field(default_factory=ConvergenceConfig)
    seed: int = 0

    @property
    def algorithm_name(self) -> str:
        """QGC<case><payoff><lrr>, e.g. QGC1PDL1."""
        case = "1" if self.strategy_case is StrategyCase.CASE1 else "2"
        payoff = "PD" if self.payoff is PayoffKind.PD_LIKE else "SD"
        lrr = "L1" if self.lrr is LrrKind.L1 else "L2"
        return f"QGC{case}{payoff}{lrr}"


class CsvFormatError(ValueError):
    pass


_MISSING = {"", "?"}


def load_csv(
    path: str | Path,
    has_header: bool = False,
    label_column: int | None = None,
    name: str | None = None,
) -> Dataset:
    """Parse a numeric CSV; empty or "?" cells become NaN for later imputation.

    label_column (0-based, may be negative) is removed from the features and
    kept as class ids.
    """
    path = Path(path)
    rows: list[list[str]] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        for row in reader:
            if row:
                rows.append(row)
    if has_header:
        rows = rows[1:]
    if not rows:
        raise CsvFormatError(f"{path}: no data rows")
    width = len(rows[0])
    features: list[list[float]] = []
    labels: list[str] = []
    for lineno, row in enumerate(rows, start=2 if has_header else 1):
        if len(row) != width:
            raise CsvFormatError(f"{path}:{lineno}: expected {width} cells, got {len(row)}")
        cells = list(row)
        if label_column is not None:
            labels.append(cells.pop(label_column if label_column >= 0 else label_column))
        parsed = []
        for cell in cells:
            cell = cell.strip()
            if cell in _MISSING:
                parsed.append(np.nan)
            else:
                try:
                    parsed.append(float(cell))
                except ValueError as exc:
                    raise CsvFormatError(f"{path}:{lineno}: non-numeric cell {cell!r}") from exc
        features.append(parsed)
    points = np.array(features, dtype=float)
    label_arr = None
    n_classes = 1
    if label_column is not None:
        uniq = {v: i for i, v in enumerate(dict.fromkeys(labels))}
        label_arr = np.array([uniq[v] for v in labels], dtype=int)
        n_classes = len(uniq)
    return Dataset(
        points=points,
        labels=label_arr,
        name=name or path.stem,
        preset_clusters=n_classes,
    )


def impute_missing(dataset: Dataset, seed: int = 0) -> Dataset:
    """Replace each missing cell by a uniform draw from its column's observed range."""
    points = dataset.points
    if not np.isnan(points).any():
        return dataset
    rng = np.random.default_rng(seed)
    points = points.copy()
    for col in range(points.shape[1]):
        mask = np.isnan(points[:, col])
        if not mask.any():
            continue
        observed = points[~mask, col]
        if observed.size == 0:
            raise ValueError(f"column {col} has no observed values to impute from")
        lo, hi = observed.min(), observed.max()
        points[mask, col] = rng.uniform(lo, hi, size=int(mask.sum()))
    return replace(dataset, points=points)


def standardize(dataset: Dataset) -> Dataset:
    """Center each column and scale to unit sample std; constant columns pass through."""
    points = dataset.points.copy()
    mean = points.mean(axis=0)
    std = points.std(axis=0, ddof=1)
    keep = std > 0
    points[:, keep] = (points[:, keep] - mean[keep]) / std[keep]
    return replace(dataset, points=points)


_DATA_DIR = Path(__file__).resolve().parents[2] / "data"


def load_builtin(name: str, data_dir: str | Path | None = None) -> Dataset:
    """Named datasets: iris and wine ship with scikit-learn; soybean and
    breast are read from the repository data/ directory (see
    scripts/fetch_datasets.py)."""
    key = name.lower()
    if key == "iris":
        from sklearn.datasets import load_iris

        raw = load_iris()
        return Dataset(points=raw.data.astype(float), labels=raw.target, name="iris",
                       preset_clusters=3)
    if key == "wine":
        from sklearn.datasets import load_wine

        raw = load_wine()
        return Dataset(points=raw.data.astype(float), labels=raw.target, name="wine",
                       preset_clusters=3)
    data_dir = Path(data_dir) if data_dir is not None else _DATA_DIR
    if key == "soybean":
        return load_csv(data_dir / "soybean-small.csv", label_column=-1, name="soybean")
    if key == "breast":
        return load_csv(data_dir / "breast-wisconsin.csv", label_column=-1, name="breast")
    raise ValueError(f"unknown builtin dataset {name!r}")
