"""Independent verification of distance, locality and optimality claims."""

from __future__ import annotations

from .bounds import BoundCertificate, bch_lower_bound, ht_lower_bound
from .classify import ClassifyOptions, LrcProfile, classify
from .distance import (SearchCapExceeded, distance_at_least_subset_rank, exact_distance_enumerate,
                       find_locality_factor, structured_low_weight_search, weight_distribution)
from .locality import RepairPlan, locality_exhaustive, locality_structural
from .optimality import beta, bv_count, hamming_defect, is_perfect, singleton_defect

__all__ = [
    "BoundCertificate", "bch_lower_bound", "ht_lower_bound", "ClassifyOptions", "LrcProfile",
    "classify", "SearchCapExceeded", "distance_at_least_subset_rank", "exact_distance_enumerate",
    "find_locality_factor", "structured_low_weight_search", "weight_distribution", "RepairPlan",
    "locality_exhaustive", "locality_structural", "beta", "bv_count", "hamming_defect",
    "is_perfect", "singleton_defect",
]
