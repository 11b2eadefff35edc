"""Search-based adversarial scene testing for driving controllers.

The package parses scenario/agent/sampler specification files, samples
operating conditions with passive and feedback-driven samplers, executes
scenes against a controller in a built-in desk-scale simulator (or an
external one over a wire protocol), scores infractions, and reports the
failure cases it finds.
"""

__version__ = "0.1.0"
