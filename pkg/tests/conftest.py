# Keeps the tests directory importable for the shared fixture modules.
