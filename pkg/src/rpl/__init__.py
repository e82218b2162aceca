"""Perfect powers among sums of two terms of a binary recurrence.

Exact term arithmetic, certified interval bounds for the fixed-base search,
exhaustive solvers, perfect-power detection and an abc-triple laboratory.
"""
from .abclab import (AbcTriple, XYRecord, estimate_lower_constants, radical, scan_quality,
                     triple, xy_pair)
from .bounds import (EffectiveBounds, MatveevInput, derive_constants, gap_bound,
                     height_quadratic, invert_log_power, matveev_bound, search_bound,
                     upper_envelope)
from .errors import (DegenerateSequence, FactorizationTimeout, HypothesisViolated,
                     InvalidInput, RplError, UnsupportedSequence, ZeroEncountered,
                     ZeroInput, ZeroProduct, ZeroTerm)
from .powers import PowerRepr, int_root, is_power_of, perfect_power
from .quadratic import QuadElem
from .recurrence import (RecurrenceSequence, check_nondegenerate, companion_term,
                         exceptional_condition, make_sequence, term, terms)
from .solver import (Solution, SolutionSet, brute_search, square_family, solve_fixed_x,
                     verify_solution)

__version__ = "0.1.0"
