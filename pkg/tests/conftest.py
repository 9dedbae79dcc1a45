import numpy as np
import pytest

from binselect.dataset import (
    Dataset,
    DataView,
    load_manifest,
    resolve_manifest_path,
    split_views,
    stratified_split,
)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def make_views(train_x, train_y, test_x, test_y):
    train = DataView(x=np.asarray(train_x, dtype=np.float64), y=np.asarray(train_y))
    test = DataView(x=np.asarray(test_x, dtype=np.float64), y=np.asarray(test_y))
    return train, test


def random_problem(rng, n_train=25, n_test=8, dim=5, n_classes=2):
    """A random classification fixture; labels cover every class."""
    train_y = np.concatenate(
        [np.arange(n_classes), rng.integers(0, n_classes, n_train - n_classes)]
    )
    return make_views(
        rng.uniform(0.0, 1.0, (n_train, dim)),
        train_y,
        rng.uniform(0.0, 1.0, (n_test, dim)),
        rng.integers(0, n_classes, n_test),
    )


def separable_dataset(seed, n_rows=70, dim=11, marker_feature=0, name="separable"):
    """Uniform noise everywhere except one feature that equals the class."""
    rng = np.random.default_rng(seed)
    labels = np.arange(n_rows) % 2
    features = rng.uniform(0.0, 1.0, (n_rows, dim))
    features[:, marker_feature] = labels
    order = rng.permutation(n_rows)
    return Dataset(features=features[order], labels=labels[order], name=name)


def separable_views(seed=901, n_rows=70, dim=11, split_seed=5):
    dataset = separable_dataset(seed, n_rows=n_rows, dim=dim)
    split = stratified_split(dataset, 0.2, split_seed)
    return split_views(dataset, split)


def dataset_file_missing(name):
    entries = load_manifest(resolve_manifest_path())
    return name not in entries or not entries[name].path.exists()


def require_dataset(name):
    if dataset_file_missing(name):
        pytest.skip(
            f"dataset file for {name!r} is not present; "
            f"run scripts/fetch_datasets.py to download it"
        )


def write_dataset_files(directory, rows, label_column, name="toy"):
    """Write a CSV plus a one-entry manifest; returns the manifest path."""
    csv_path = directory / f"{name}.csv"
    csv_path.write_text("\n".join(",".join(str(c) for c in row) for row in rows) + "\n")
    manifest_path = directory / "manifest.txt"
    manifest_path.write_text(f"{name},{csv_path.name},{label_column},?\n")
    return manifest_path
