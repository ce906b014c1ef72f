"""Multisets without consecutive values, DUD-free grand-Dyck paths, and
directed lattice animals seen as heaps of dimers: bijections between the
three pictures, their statistics, and exact generating series.
"""

from .bijections import (
    GRAMMAR_CLASSES,
    Factorization,
    FactorizationFailedError,
    GrammarDuplicateError,
    NotStartingUError,
    compose,
    factorize,
    grammar_count,
    grammar_enumerate,
    heap_to_path,
    multiset_to_path,
    path_to_heap,
    path_to_multiset,
    run_components,
)
from .heaps import (
    BRUTE_FORCE_BOUND,
    LATTICES,
    AnimalStats,
    BadGroundError,
    Dimer,
    Heap,
    HeapParseError,
    MissingOriginError,
    NotAHeapError,
    PointAnimal,
    TooLargeError,
    animal_enumerate_bruteforce,
    animal_reflect,
    animal_to_heap,
    animal_validate,
    drop,
    heap_stats,
)
from .multisets import (
    Multiset,
    MultisetFlags,
    MultisetStats,
)
from .paths import (
    PathFlags,
    PathStats,
    crossings,
    modified_heights,
)
from .series import (
    CLOSED_FORMS,
    BivarTable,
    Series,
    bivariate,
    check_identities,
    closed_form,
    diagonal,
)
from .verify import SUITE_CAPS, SUITES, CheckResult, VerifyReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "GRAMMAR_CLASSES",
    "Factorization",
    "FactorizationFailedError",
    "GrammarDuplicateError",
    "NotStartingUError",
    "compose",
    "factorize",
    "grammar_count",
    "grammar_enumerate",
    "heap_to_path",
    "multiset_to_path",
    "path_to_heap",
    "path_to_multiset",
    "run_components",
    "BRUTE_FORCE_BOUND",
    "LATTICES",
    "AnimalStats",
    "BadGroundError",
    "Dimer",
    "Heap",
    "HeapParseError",
    "MissingOriginError",
    "NotAHeapError",
    "PointAnimal",
    "TooLargeError",
    "animal_enumerate_bruteforce",
    "animal_reflect",
    "animal_to_heap",
    "animal_validate",
    "drop",
    "heap_stats",
    "Multiset",
    "MultisetFlags",
    "MultisetStats",
    "PathFlags",
    "PathStats",
    "crossings",
    "modified_heights",
    "CLOSED_FORMS",
    "BivarTable",
    "Series",
    "bivariate",
    "check_identities",
    "closed_form",
    "diagonal",
    "SUITE_CAPS",
    "SUITES",
    "CheckResult",
    "VerifyReport",
    "run_all",
    "run_suite",
    "__version__",
]
