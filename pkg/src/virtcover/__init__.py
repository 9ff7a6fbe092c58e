"""Virtual link diagrams, cut systems and their coherent double coverings."""

from .bracket import bracket_state_sum, f_polynomial
from .codec import emit_report, format_doubled, format_laurent, parse, serialize
from .covering import CoverCode, canonical_cover, coherent_double_cover, cover_with_cut_orientation
from .errors import (
    BadComponent,
    CodeSyntaxError,
    DiagramError,
    InfeasibleOrientation,
    InvalidCode,
    MissingRotation,
    NonEmptyCutSet,
    NotACutSystem,
    NotAKnot,
    NotApplicable,
    NotEven,
    TooLarge,
)
from .gauss import ExtendedGaussCode, Passage, chords, is_even, mirror_switch, project_to_plain, validate, writhe
from .invariants import (
    compute_report,
    cover_vector,
    lambda_abs,
    linking,
    lk_n,
    nu_abs,
    odd_writhe,
    q_set,
    self_pair_link,
)
from .moves import MoveInstance, apply, enumerate_moves, random_walk
from .orientation import canonical_cut_system, is_cut_system, is_normal, solve_alternate
from .realize import genus, realize

__version__ = "0.1.0"
