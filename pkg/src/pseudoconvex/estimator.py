"""scikit-learn style wrappers.

``PseudoConvexPartition`` treats a partition as a clustering: ``labels_[i]``
is the part holding point ``i``.  ``predict`` assigns new points to the part
whose closed polygon contains them (``-1`` when none does).
``ConvexLayerDepth`` is a stateless transformer mapping each point to its
convex-layer index.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .exceptions import BadInput
from .geometry import COORD_LIMIT, PointSet, convex_layers
from .oracle import SearchBudget, min_partition
from .partition import point_in_polygon, verify_partition
from .partitioner import partition_any

STRATEGIES = ("sweep", "oracle")


def check_points(X) -> np.ndarray:
    """Validate an (n, 2) array of integer-valued coordinates within the bound."""
    X = check_array(X, dtype=None, ensure_min_samples=1)
    if X.shape[1] != 2:
        raise BadInput(f"expected 2 columns, got {X.shape[1]}")
    if X.dtype.kind == "f":
        if not np.all(np.isfinite(X)) or not np.all(X == np.round(X)):
            raise BadInput("coordinates must be integers")
    elif X.dtype.kind not in "iu":
        raise BadInput(f"unsupported dtype {X.dtype}")
    if np.any(np.abs(X) > COORD_LIMIT):
        raise BadInput("coordinates exceed the bound 2**30")
    return X


def to_point_set(X) -> PointSet:
    X = check_points(X)
    return PointSet([(int(x), int(y)) for x, y in X])


class PseudoConvexPartition(ClusterMixin, BaseEstimator):
    """Partition a planar point set into disjoint holes and empty pseudo-triangles.

    Parameters
    ----------
    strategy : {"sweep", "oracle"}
        ``sweep`` gives at most ceil(3n/13) parts for any n; ``oracle`` runs the
        exhaustive minimum search (small n only).
    max_parts : int
        Part budget for the oracle.
    allow_degenerate : bool
        Let the oracle use 1- and 2-point blocks.
    n_jobs : int
        Worker processes for 13-point blocks in the sweep strategy.
    """

    def __init__(self, strategy: str = "sweep", max_parts: int = 3, allow_degenerate: bool = False,
                 n_jobs: int = 1):
        self.strategy = strategy
        self.max_parts = max_parts
        self.allow_degenerate = allow_degenerate
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        S = to_point_set(X)
        if self.strategy == "sweep":
            P = partition_any(S, jobs=self.n_jobs)
        else:
            budget = SearchBudget(max_parts=self.max_parts, allow_degenerate=self.allow_degenerate)
            _, P = min_partition(S, budget)
        self.partition_ = P
        self.labels_ = np.asarray(P.labels(), dtype=int)
        self.branch_ = P.branch
        self.n_parts_ = len(P.parts)
        self.verified_ = verify_partition(P).overall
        self.n_features_in_ = 2
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "partition_")
        X = check_points(X)
        coords = self.partition_.points.coords
        polys = [[coords[i] for i in part.boundary()] for part in self.partition_.parts]
        out = np.full(len(X), -1, dtype=int)
        for r, (x, y) in enumerate(X):
            q = (int(x), int(y))
            for k, poly in enumerate(polys):
                if (len(poly) >= 3 and point_in_polygon(poly, q) >= 0) or q in poly:
                    out[r] = k
                    break
        return out


class ConvexLayerDepth(TransformerMixin, BaseEstimator):
    """Stateless transformer: the convex-layer index (0 = hull) of each point."""

    def fit(self, X, y=None):
        check_points(X)
        self.n_features_in_ = 2
        return self

    def transform(self, X) -> np.ndarray:
        S = to_point_set(X)
        layers = convex_layers(S.coords)
        return np.array([[layers.layer_of[i]] for i in range(len(S))], dtype=int)
