import pytest

from tropfront import ExplicitSetOracle, Knapsack01Oracle

# Three-objective 0/1 knapsack used as the main worked example throughout
# the suite. Outcomes are translated by +4 per objective for readability.
KNAPSACK_P = ((-1, -4, -3, -1), (-4, -1, -2, -2), (-4, -1, -2, -3))
KNAPSACK_W = ((2, 1, 1, 1), (0, 3, 1, 0), (0, 1, 1, 2))
KNAPSACK_C = (2, 3, 2)
KNAPSACK_TRANSLATE = (4, 4, 4)

# Its translated outcome set and the expected answers.
KNAPSACK_OUTCOMES = ((4, 4, 4), (3, 0, 0), (0, 3, 3), (1, 2, 2), (3, 2, 1))
KNAPSACK_NONDOMINATED = {(3, 0, 0), (0, 3, 3), (1, 2, 2)}
KNAPSACK_BOUNDS = {
    ("inf", 0, "inf"),
    ("inf", "inf", 0),
    (0, "inf", "inf"),
    (1, 3, "inf"),
    (1, "inf", 3),
    (3, 2, "inf"),
    (3, "inf", 2),
}

# Two-objective toy cloud with exactly two nondominated points.
MULTI_CLOUD = ((0, 0), (1, 1), (-3, 2), (2, 2), (-2, 3), (-1, 4))
MULTI_NONDOMINATED = {(0, 0), (-3, 2)}


@pytest.fixture(scope="session")
def knapsack_oracle():
    return Knapsack01Oracle(
        KNAPSACK_P, KNAPSACK_W, KNAPSACK_C, translate=KNAPSACK_TRANSLATE
    )


@pytest.fixture(scope="session")
def multi_oracle():
    return ExplicitSetOracle(MULTI_CLOUD)
