"""Exception types shared across the package."""


class CdeditError(Exception):
    """Base class for all protocol-level errors."""


class PolicySyntaxError(CdeditError):
    """Policy string does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Unauthorized(CdeditError):
    """Attribute set does not satisfy the access policy."""


class IntegrityFailure(CdeditError):
    """Recovered values are inconsistent with the published hash material."""


class VerifyFailed(CdeditError):
    """An input tuple failed verification before an operation."""


class TrapdoorMismatch(IntegrityFailure):
    """Decrypted trapdoor material does not match the hash being adapted."""


class InsufficientDeposit(CdeditError):
    """Deposit does not cover the cost of the requested edit."""


class UnknownRequester(CdeditError):
    """Requester is not registered with the token service."""


class UnknownTarget(CdeditError):
    """Edit target does not resolve on the chain."""


class UnknownToken(CdeditError):
    """Token id is not known to the token service."""


class Exhausted(CdeditError):
    """Token has no uses remaining (or can no longer be used)."""


class TokenInvalid(CdeditError):
    """Token failed signature/expiry verification."""


class TokenKindMismatch(CdeditError):
    """Token kind does not authorize the targeted edit."""


class ImmutableTarget(CdeditError):
    """Edit target is an immutable transaction or block."""


class NonceExhausted(CdeditError):
    """Mining gave up: nonce reached the hash-query bound."""


class LinkBroken(CdeditError):
    """Internal consistency assertion: a hash link changed after an edit."""


class MissingLog(CdeditError):
    """Audit was requested without the edit-log evidence it needs."""


class UnknownModifier(CdeditError):
    """Modifier id is not registered."""


class EmptyAttributeSet(CdeditError):
    """Key generation was requested for an empty attribute set."""


class ScenarioError(CdeditError):
    """A scenario step failed; carries the failing step index."""

    def __init__(self, step_index: int, op: str, message: str):
        super().__init__(f"step {step_index} ({op}): {message}")
        self.step_index = step_index
        self.op = op
