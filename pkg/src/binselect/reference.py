"""Published benchmark results used as fixed comparison columns.

Mean and standard deviation of test accuracy and selected-feature counts for
four binary wrapper optimizers (BBA, BGSA, BGWO, BDA) and the two binary sine
cosine variants (SBSCA, VBSCA), each over 30 runs on five medical datasets.
Shipping them as static data lets rank comparisons run without reimplementing
the baseline optimizers.
"""

from __future__ import annotations

import numpy as np

ALGORITHMS: tuple[str, ...] = ("BBA", "BGSA", "BGWO", "BDA", "SBSCA", "VBSCA")

DATASET_ORDER: tuple[str, ...] = (
    "pima",
    "breast_cancer",
    "heart",
    "lymphography",
    "breast_wdbc",
)

DISPLAY_NAMES: dict[str, str] = {
    "pima": "Pima",
    "breast_cancer": "Breast Cancer",
    "heart": "Heart",
    "lymphography": "Lymphography",
    "breast_wdbc": "Breast-WDBC",
}

# rows after cleaning: (instances, columns including the label, classes)
EXPECTED_SHAPES: dict[str, tuple[int, int, int]] = {
    "pima": (768, 9, 2),
    "breast_cancer": (683, 10, 2),
    "heart": (270, 14, 2),
    "lymphography": (148, 19, 4),
    "breast_wdbc": (569, 31, 2),
}

ACCURACY_MEAN: dict[str, tuple[float, ...]] = {
    "pima": (0.7541, 0.7727, 0.7667, 0.6697, 0.7727, 0.7727),
    "breast_cancer": (0.9983, 1.0000, 0.9998, 0.8659, 1.0000, 1.0000),
    "heart": (0.8525, 0.8772, 0.8716, 0.6975, 0.8963, 0.8926),
    "lymphography": (0.7978, 0.8344, 0.8300, 0.7978, 0.8767, 0.8633),
    "breast_wdbc": (0.9518, 0.9591, 0.9532, 0.9556, 0.9673, 0.9655),
}

ACCURACY_STD: dict[str, tuple[float, ...]] = {
    "pima": (0.0119, 0.0000, 0.0098, 0.1120, 0.0000, 0.0000),
    "breast_cancer": (0.0031, 0.0000, 0.0013, 0.1038, 0.0000, 0.0000),
    "heart": (0.0179, 0.0091, 0.0257, 0.2372, 0.0092, 0.0075),
    "lymphography": (0.0230, 0.0205, 0.0268, 0.2174, 0.0250, 0.0202),
    "breast_wdbc": (0.0060, 0.0048, 0.0066, 0.0679, 0.0046, 0.0022),
}

FEATURES_MEAN: dict[str, tuple[float, ...]] = {
    "pima": (3.00, 5.00, 5.10, 5.00, 5.00, 5.00),
    "breast_cancer": (3.27, 3.20, 4.27, 3.00, 3.00, 3.00),
    "heart": (5.07, 4.97, 7.03, 5.33, 5.27, 5.27),
    "lymphography": (6.33, 7.63, 9.73, 6.03, 6.13, 7.23),
    "breast_wdbc": (11.10, 12.77, 11.93, 4.27, 4.20, 9.33),
}

FEATURES_STD: dict[str, tuple[float, ...]] = {
    "pima": (1.53, 0.00, 0.31, 0.00, 0.00, 0.00),
    "breast_cancer": (1.41, 0.41, 1.08, 0.00, 0.00, 0.00),
    "heart": (2.07, 1.16, 0.76, 1.42, 1.46, 1.41),
    "lymphography": (3.07, 1.73, 2.21, 1.33, 1.55, 2.06),
    "breast_wdbc": (3.39, 2.51, 2.46, 1.14, 1.06, 2.25),
}


def _matrix(table: dict[str, tuple[float, ...]], datasets) -> np.ndarray:
    names = DATASET_ORDER if datasets is None else tuple(datasets)
    return np.array([table[name] for name in names], dtype=np.float64)


def accuracy_matrix(datasets=None) -> np.ndarray:
    """Mean-accuracy rows (datasets x algorithms) in ALGORITHMS column order."""
    return _matrix(ACCURACY_MEAN, datasets)


def features_matrix(datasets=None) -> np.ndarray:
    """Mean-feature-count rows (datasets x algorithms) in ALGORITHMS column order."""
    return _matrix(FEATURES_MEAN, datasets)


def summary_values(dataset: str, algorithm: str) -> tuple[float, float, float, float]:
    """(mean accuracy, accuracy std, mean features, features std) for one cell."""
    col = ALGORITHMS.index(algorithm)
    return (
        ACCURACY_MEAN[dataset][col],
        ACCURACY_STD[dataset][col],
        FEATURES_MEAN[dataset][col],
        FEATURES_STD[dataset][col],
    )
