import os

# Enable the matrix-product cross-check inside the membership test for the
# whole suite.  Must happen before the package is imported anywhere.
os.environ.setdefault("QUIDDITY_SELF_CHECK", "1")
