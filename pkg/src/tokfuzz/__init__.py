"""Token-level coverage-guided fuzzing for interpreters."""

__version__ = "0.1.0"
