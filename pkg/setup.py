from setuptools import setup, find_packages

setup(
    name="factorlab",
    version="0.1.0",
    description="Integer factorization toolkit: classical baselines, triangular, matrix decomposition and bivariate form methods",
    license="MIT",
    packages=find_packages(exclude=("tests", "tests.*")),
    python_requires=">=3.9",
    install_requires=["sympy>=1.12"],
    extras_require={"dev": ["pytest>=7"]},
    entry_points={"console_scripts": ["factorlab = factorlab.cli:main"]},
    zip_safe=False,
)
