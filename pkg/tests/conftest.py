from hypothesis import settings

# fixed example streams so every run checks the same cases
settings.register_profile("repro", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("repro")
