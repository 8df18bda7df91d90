from enum import Enum
from fractions import Fraction

# Slack on the s * (#b - #r) product so that s values read from text (0.769, ...)
# do not flip the integer decision at the exact boundary
CRITERION_EPSILON = 1e-12


class Observation(Enum):
    """
    Kind of observation of a conclusion symbol, used to replay belief traces

    - RULE_SEEN: the conclusion was observed together with the premise
    - CONCLUSION_ONLY_SEEN: the conclusion was observed without the premise
    """

    RULE_SEEN = "rule_seen"
    CONCLUSION_ONLY_SEEN = "conclusion_only_seen"


def belief_update(belief_prev: float, p_ab: float) -> float:
    """
    Recursive belief update of a rule a -> b

    Applies Bayes' theorem with the current estimate of P(a|b) to the belief of the
    previous rule observation:

    B_k = P(a|b) * B_k-1 / (P(a|b) * B_k-1 + (1 - P(a|b)) * (1 - B_k-1))

    A saturated belief (0 or 1) stays saturated.

    :param float belief_prev: belief after the previous rule observation, in [0, 1]
    :param float p_ab: current estimate of P(a|b), in [0, 1]
    :return: updated belief
    :rtype: float
    """
    numerator = p_ab * belief_prev
    denominator = numerator + (1 - p_ab) * (1 - belief_prev)
    if denominator == 0:
        return belief_prev
    return numerator / denominator


def _check_counts(rule_count: int, conclusion_count: int):
    if rule_count <= 0:
        raise ValueError(
            f"A rule needs to be observed at least once to estimate P(a|b), "
            f"rule count is {rule_count}"
        )
    if rule_count > conclusion_count:
        raise ValueError(
            f"Rule count ({rule_count}) cannot exceed the conclusion count "
            f"({conclusion_count})"
        )


def estimate_p_ab(rule_count: int, conclusion_count: int, s: float = 1.0) -> float:
    """
    Estimates P(a|b) of a rule a -> b from its counters

    The selector s weights the conclusion observations that were not associated with
    the premise: #r / (s * (#b - #r) + #r). With s = 1 this is the plain ratio #r/#b,
    with s = 0 every observed rule is estimated at 1.

    :param int rule_count: number of rule observations #r
    :param int conclusion_count: number of conclusion observations #b
    :param float s: selector in [0, 1]
    :return: estimate of P(a|b)
    :rtype: float
    """
    _check_counts(rule_count, conclusion_count)
    unassociated = conclusion_count - rule_count
    return rule_count / (s * unassociated + rule_count)


def passes_criterion(rule_count: int, conclusion_count: int, s: float = 1.0) -> bool:
    """
    Increasing belief criterion on integer counters

    The belief of a rule increases (or stays) exactly when P(a|b) >= 0.5, which
    reduces to #r >= s * (#b - #r). The prior does not enter the test.

    :param int rule_count: number of rule observations #r
    :param int conclusion_count: number of conclusion observations #b
    :param float s: selector in [0, 1]
    :return: True if the rule has increasing belief
    :rtype: bool
    """
    _check_counts(rule_count, conclusion_count)
    return rule_count >= s * (conclusion_count - rule_count) - CRITERION_EPSILON


def min_selector(rule_count: int, conclusion_count: int) -> float:
    """
    Smallest selector s at which a rule still passes, capped at 1

    :param int rule_count: number of rule observations #r
    :param int conclusion_count: number of conclusion observations #b
    :return: min(1, #r / (#b - #r))
    :rtype: float
    """
    _check_counts(rule_count, conclusion_count)
    unassociated = conclusion_count - rule_count
    if unassociated == 0:
        return 1.0
    return min(1.0, rule_count / unassociated)


def belief_trace(
    observations: list[Observation], p: float, exact: bool = False
) -> list[float]:
    """
    Replays a sequence of conclusion observations and returns the belief after each
    rule observation

    Every entry is an observation of the conclusion symbol; RULE_SEEN entries are
    also rule observations. At the k-th rule observation P(a|b) is estimated as
    k / #b_k and the belief is updated recursively starting from the prior p.

    :param list observations: ordered observations of the conclusion symbol
    :param float p: prior belief in (0, 1)
    :param bool exact: computes with rational numbers instead of floats
    :return: belief after each rule observation
    :rtype: list
    """
    if not observations:
        raise ValueError("A belief trace needs at least one observation")
    if not 0 < p < 1:
        raise ValueError(f"The prior needs to be in (0, 1), got {p}")

    belief = Fraction(p) if exact else p
    rule_count = 0
    conclusion_count = 0
    trace = []
    for observation in observations:
        conclusion_count += 1
        if observation is not Observation.RULE_SEEN:
            continue
        rule_count += 1
        if exact:
            p_ab = Fraction(rule_count, conclusion_count)
        else:
            p_ab = rule_count / conclusion_count
        belief = belief_update(belief, p_ab)
        trace.append(belief)
    return trace


def quick_belief(
    rule_count: int, conclusion_count: int, p: float, s: float = 1.0
) -> float:
    """
    Belief of a rule assuming all unassociated conclusions were observed before the
    first rule observation

    Folds the belief update from the prior p with P(a|b)_i = i / (s * u + i) for
    i = 1..#r, where u = #b - #r. Needs no pass over the data.

    :param int rule_count: final rule count #r
    :param int conclusion_count: final conclusion count #b
    :param float p: prior belief
    :param float s: selector
    :return: belief after the last rule observation
    :rtype: float
    """
    _check_counts(rule_count, conclusion_count)
    unassociated = conclusion_count - rule_count
    belief = p
    for i in range(1, rule_count + 1):
        belief = belief_update(belief, i / (s * unassociated + i))
        if belief in (0.0, 1.0):
            break
    return belief
