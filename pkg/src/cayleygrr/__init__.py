"""Cayley digraphs on finite abelian groups and the censuses of their automorphism groups."""

from .abelian import AbelianGroup, abelian_groups_of_order, make_group, parse_group
from .cayley import ConnectionSet, build, parse_set
from .census import bounds, exact_census, sample_census
from .classify import classify
from .errors import ClaimViolation, DichotomyViolation, InvalidInput, ResourceGuard
from .unlabeled import drr_conjugacy_check, orbit_count, unlabeled_census

__all__ = [
    "AbelianGroup", "ClaimViolation", "ConnectionSet", "DichotomyViolation", "InvalidInput",
    "ResourceGuard", "abelian_groups_of_order", "bounds", "build", "classify", "drr_conjugacy_check",
    "exact_census", "make_group", "orbit_count", "parse_group", "parse_set", "sample_census",
    "unlabeled_census",
]
