"""Dyck word factorization and peak/valley reconstruction."""

from dyckpath.core import (
    DOWN,
    UP,
    DyckWord,
    LatticePoint,
    PrimeFragment,
    Step,
    alphabet_from_pair,
    concat_fragments,
    factorize,
    is_prime,
    level_profile,
    parse_word,
    peaks,
    semilength,
    valleys,
)
from dyckpath.enumeration import EnumerationCursor, catalan, enumerate_words
from dyckpath.errors import (
    BoundExceeded,
    DyckError,
    EmptyWord,
    InvalidAdjacency,
    InvalidPeakSet,
    InvalidSymbol,
    InvalidValleySet,
    NotAPath,
    ParityViolation,
    ParseError,
    PrefixUnderflow,
    Unbalanced,
)
from dyckpath.grid import (
    ModifiedPoint,
    cantor_pair,
    cantor_unpair,
    encode_peak_set,
    from_modified,
    peaks_modified,
    to_modified,
    valleys_modified,
)
from dyckpath.reconstruct import (
    ValidationReport,
    Violation,
    peak_between,
    peaks_from_valleys,
    validate_peak_set,
    validate_valley_set,
    valley_between,
    valleys_from_peaks,
    word_from_peaks,
    word_from_valleys,
)
from dyckpath.render import render

__all__ = [name for name in dir() if not name.startswith("_")]
