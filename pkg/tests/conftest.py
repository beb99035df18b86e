# Shared test configuration

from hypothesis import HealthCheck, settings

# Exact arithmetic on big integers has uneven per-example cost
settings.register_profile(
    "orthochroma",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("orthochroma")
