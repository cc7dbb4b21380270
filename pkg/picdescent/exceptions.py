"""
Error hierarchy shared by every app.

Each error carries the process exit status the command-line front end uses
when the error escapes a command.
"""


class PicdescentError(Exception):
    """
    Base class for picdescent errors.

    Subclasses should provide `default_detail` and `exit_status`.
    """
    default_detail = 'A picdescent error occurred.'
    exit_status = 1

    def __init__(self, detail=None):
        if detail is None:
            detail = self.default_detail
        self.detail = str(detail)
        super().__init__(self.detail)

    def __str__(self):
        return self.detail


class CheckFailed(PicdescentError):
    default_detail = 'A requested check did not pass.'
    exit_status = 1


class InputError(PicdescentError, ValueError):
    default_detail = 'Malformed or unsupported input.'
    exit_status = 2


class UnknownGroupError(InputError):
    default_detail = 'Unknown built-in group.'


class UnsupportedDegreeError(InputError):
    default_detail = 'degree capped at 2'


class InconsistentDataError(PicdescentError, ValueError):
    default_detail = 'Input data is mathematically inconsistent.'
    exit_status = 3


class InconsistentActionError(InconsistentDataError):
    """
    The action matrices do not define a homomorphism into Aut(M).

    `pair` holds the first (g, h) with action(g)·action(h) != action(gh).
    """
    default_detail = 'Action matrices are not a group homomorphism.'

    def __init__(self, detail=None, pair=None):
        self.pair = pair
        if detail is None and pair is not None:
            detail = f'action({pair[0]})·action({pair[1]}) differs from action({pair[0]}·{pair[1]})'
        super().__init__(detail)


class GuardExceeded(PicdescentError, RuntimeError):
    default_detail = 'Computation exceeds the configured size guard.'
    exit_status = 4
