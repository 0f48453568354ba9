"""Skew polynomial rings over finite fields, skew polycyclic codes, designed-distance
certificates, and equivalence classes of skew polycyclic ambient spaces."""

from __future__ import annotations

from ._kernels import backend
from .bounds import BoundCertificate, bch_search, ht_search, roos_search, search, verify_certificate
from .codes import SkewCode, hamming_weight, min_distance, rank_weight, weight_distribution
from .equiv import (EquivalenceWitness, PolyShape, TrinomialShape, count_general_classes,
                    count_hamming_classes, count_rank_classes, hamming_representatives,
                    rank_representatives, trinomial_hamming_witness, trinomial_rank_witness)
from .errors import OrecodeError
from .field import FieldAutomorphism, FiniteField, SubfieldEmbedding, make_field, parse_field_spec
from .frame import ExtensionFrame
from .skew import SkewPolynomial, SkewRing, gcrd, lclm, right_exponent

__version__ = "0.1.0"

__all__ = [
    "backend", "BoundCertificate", "bch_search", "ht_search", "roos_search", "search",
    "verify_certificate", "SkewCode", "hamming_weight", "min_distance", "rank_weight",
    "weight_distribution", "EquivalenceWitness", "PolyShape", "TrinomialShape",
    "count_general_classes", "count_hamming_classes", "count_rank_classes",
    "hamming_representatives", "rank_representatives", "trinomial_hamming_witness",
    "trinomial_rank_witness", "OrecodeError", "FieldAutomorphism", "FiniteField",
    "SubfieldEmbedding", "make_field", "parse_field_spec", "ExtensionFrame", "SkewPolynomial",
    "SkewRing", "gcrd", "lclm", "right_exponent",
]
