class HypothesisError(ValueError):
    """An input lies outside the hypotheses of a closed formula."""
