import os

from setuptools import setup

# The compiled stepping kernel is optional: the package falls back to the
# pure-Python kernel when the extension is missing or fails to build.
# ADVSCENE_NO_EXT=1 skips the extension entirely.
ext_modules = []
if not os.environ.get("ADVSCENE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            "src/advscene/harness/_kernel_cy.pyx",
            compiler_directives={"language_level": "3"},
        )
        # -ffp-contract=off keeps float ops bit-identical to the pure-Python
        # kernel (no fused multiply-add contraction).
        for ext in ext_modules:
            ext.extra_compile_args = ["-O2", "-ffp-contract=off"]
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
