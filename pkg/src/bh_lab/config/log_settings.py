from dataclasses import dataclass


@dataclass(frozen=True)
class LogSettings:
    # Structured messenger entries retained per campaign
    messages_limit: int = 200
    # Default level of the console handler installed by the CLI
    console_level: str = "WARNING"
