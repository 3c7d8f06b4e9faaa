from dataclasses import dataclass


@dataclass(frozen=True)
class ReportSettings:
    # Significant digits used when printing floats
    significant_digits: int = 17
    # Header of the constants CSV
    constants_header: tuple[str, ...] = ("m", "t", "field", "exponent", "C_recursive", "C_closed")
    # Header of the exponent comparison CSV
    comparison_header: tuple[str, ...] = ("n", "N", "q", "r", "old", "new", "verdict")
    # JSON indentation
    json_indent: int = 2
    # Newest campaign messages echoed under the verify summary
    summary_messages: int = 5
