"""Exception hierarchy shared by all modules."""


class RplError(Exception):
    """Base class for library errors."""


class DegenerateSequence(RplError, ValueError):
    """The seeds violate the standing hypotheses (PQ != 0, D > 0, alpha > |beta|, ...)."""


class UnsupportedSequence(DegenerateSequence):
    """Valid sequence, but the requested computation needs an irrational discriminant."""


class HypothesisViolated(RplError, ValueError):
    pass


class InvalidInput(RplError, ValueError):
    pass


class ZeroInput(RplError, ValueError):
    pass


class ZeroProduct(RplError, ValueError):
    pass


class ZeroTerm(RplError, ValueError):
    """Y_{n,m} vanished, so no abc triple can be formed."""


class ZeroEncountered(RplError, ValueError):
    def __init__(self, n: int, m: int):
        super().__init__(f"U_{n} + U_{m} = 0")
        self.n = n
        self.m = m


class FactorizationTimeout(RplError, TimeoutError):
    """Factorization budget exhausted.

    ``partial`` maps the primes found so far to their exponents and
    ``cofactor`` is the part that is still unfactored (> 1).
    """

    def __init__(self, n: int, partial: dict[int, int], cofactor: int, payload=None):
        super().__init__(f"factorization of {n} timed out; unfactored cofactor has "
                         f"{cofactor.bit_length()} bits")
        self.n = n
        self.partial = partial
        self.cofactor = cofactor
        # set by callers that can still produce a partial report
        self.payload = payload
