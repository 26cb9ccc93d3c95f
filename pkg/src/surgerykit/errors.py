"""Exception types shared across the package."""


class SurgeryKitError(Exception):
    """Base class for all errors raised by surgerykit."""


class PDError(SurgeryKitError):
    """Malformed PD text or an inconsistent link diagram."""


class SiteError(SurgeryKitError):
    """A surgery site that does not match the object it is applied to."""


class MeshError(SurgeryKitError):
    """Bad level-set sampling parameters or an unsupported mesh format."""


class PresentationError(SurgeryKitError):
    """Invalid group presentation data."""


class ScriptError(SurgeryKitError):
    """Error in a surgery program, carrying a source position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line:
            return f"{self.line}:{self.column}: {self.message}"
        return self.message
