"""Decoder status codes shared by both kernel backends."""

DECODED = 0
NO_CONSISTENT_T = 1
NON_UNIQUE_SOLUTION = 2
ROOT_COUNT_MISMATCH = 3
ROOT_NOT_A_LOCATOR = 4
NO_ERROR_VALUES = 5
NOT_IN_SUBFIELD = 6

REASONS = {
    NO_CONSISTENT_T: "NoConsistentT",
    NON_UNIQUE_SOLUTION: "NonUniqueSolution",
    ROOT_COUNT_MISMATCH: "RootCountMismatch",
    ROOT_NOT_A_LOCATOR: "RootNotALocator",
    NO_ERROR_VALUES: "NoErrorValues",
    NOT_IN_SUBFIELD: "NotInSubfield",
}
