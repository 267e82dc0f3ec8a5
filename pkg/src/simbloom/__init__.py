"""Password similarity over Bloom filters.

Non-overlapping n-grams of a password are hashed through a salted hash
family into a bit bucket; two buckets built with the same family are
compared with an overlap coefficient, so similarity between a candidate
and past passwords can be measured without keeping any clear text.
The package also ships the analytic sizing formulas and the anagram
attack as a built-in audit tool.
"""

__version__ = "0.1.0"

from .attack import (
    PRINTABLE_ASCII,
    AttackConfig,
    AttackReport,
    count_combinations,
    count_combinations_range,
    enumerate_grams,
    reconstruct,
    recover_grams,
    run_attack,
)
from .bloomfilter import BloomFilter
from .checker import CheckDecision, check_candidate
from .errors import (
    CanonicalFormError,
    ConfigurationError,
    FormatError,
    IncompatibleFiltersError,
    ParameterError,
    ResourceLimitError,
    SimbloomError,
    StoreError,
    TruncatedFileError,
    UnsupportedFormatError,
)
from .hashing import (
    HashFamily,
    generate_keyed_family,
    generate_random_family,
    index_of,
)
from .similarity import DistanceReport, distance, edit_distance, ngrams, qinsert
from .sizing import (
    SizingParams,
    false_positive_probability,
    obfuscating_params,
    optimal_k,
    optimal_m,
)
from .storage import FilterStore, parse, serialize

__all__ = [
    "AttackConfig",
    "AttackReport",
    "BloomFilter",
    "CanonicalFormError",
    "CheckDecision",
    "ConfigurationError",
    "DistanceReport",
    "FilterStore",
    "FormatError",
    "HashFamily",
    "IncompatibleFiltersError",
    "PRINTABLE_ASCII",
    "ParameterError",
    "ResourceLimitError",
    "SimbloomError",
    "SizingParams",
    "StoreError",
    "TruncatedFileError",
    "UnsupportedFormatError",
    "check_candidate",
    "count_combinations",
    "count_combinations_range",
    "distance",
    "edit_distance",
    "enumerate_grams",
    "false_positive_probability",
    "generate_keyed_family",
    "generate_random_family",
    "index_of",
    "ngrams",
    "obfuscating_params",
    "optimal_k",
    "optimal_m",
    "parse",
    "qinsert",
    "reconstruct",
    "recover_grams",
    "run_attack",
    "serialize",
]
