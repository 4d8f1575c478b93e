"""Cycle synthesis and 8-cycle classification for burnt pancake graphs."""
from .base_cycles import BaseCycleSpec, CopyProfile, base_cycle, check_observations, copy_profile
from .errors import (
    BurntError,
    ConstructionError,
    CorpusError,
    InvalidDimension,
    InvalidGenerator,
    MissingLength,
    NotCanonical,
    ParseError,
    ResourceLimit,
    UnreachableLength,
)
from .graph import order, rank, stats, unrank
from .octa import CanonicalForm, EightCycle, canonicalize, classify, count_8cycles, form_to_word
from .perm import (
    CycleWitness,
    GenWord,
    SignedPerm,
    apply_reversal,
    compose,
    format_perm,
    format_word,
    identity,
    inverse,
    parse_perm,
    parse_word,
    walk,
)
from .synthesis import synth_cycle, synthesize

__version__ = "0.1.0"
