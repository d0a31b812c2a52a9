"""hexatone: an interactive coin-oracle divination engine.

Casting mathematics, chance-driven loop music, interpretation pipeline,
event rendering, and a session service, all deterministic per seed.
"""

__version__ = "0.1.0"
