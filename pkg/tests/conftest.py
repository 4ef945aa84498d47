import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", deadline=None, max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "60")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")
