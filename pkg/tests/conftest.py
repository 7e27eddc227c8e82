import hypothesis

# algebraic identities can be slow per example on small CI machines;
# correctness does not depend on wall time
hypothesis.settings.register_profile(
    "default", deadline=None, max_examples=50, derandomize=True
)
hypothesis.settings.load_profile("default")
