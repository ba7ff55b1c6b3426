"""Exception hierarchy shared by every boolat module."""


class BoolatError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class ParseError(BoolatError, ValueError):
    pass


# polycore
class ZeroPolynomial(BoolatError, ValueError):
    pass


class NotCoprime(BoolatError, ValueError):
    pass


class NotSquarefreeModP(BoolatError, ValueError):
    pass


# numfield
class NotMonic(BoolatError, ValueError):
    pass


class NotIrreducible(BoolatError, ValueError):
    pass


class NotAFactor(BoolatError, ValueError):
    pass


class DegreeTooLarge(BoolatError, ValueError):
    pass


class MinimalExtension(BoolatError, ValueError):
    pass


class NotGalois(BoolatError, ValueError):
    pass


# latcore
class NotAPoset(BoolatError, ValueError):
    pass


class NotALattice(BoolatError, ValueError):
    pass


class NoBoundedEnds(NotALattice):
    pass


class NotDistributive(BoolatError, ValueError):
    pass


class NotBoolean(BoolatError, ValueError):
    pass


class NotInInterval(BoolatError, ValueError):
    pass


# grouplat
class NotAGroup(BoolatError, ValueError):
    pass


class OrderTooLarge(BoolatError, ValueError):
    pass


class NotPrime(BoolatError, ValueError):
    pass


class InternalDisagreement(BoolatError, AssertionError):
    """Two independent decision routes disagreed: an engine bug, never user error."""
