from setuptools import setup, find_packages


setup(
    name="PyCayley-Cohomology",
    version="0.9.0",
    author="Björn",
    author_email="pycayley_cohomology@schrammel.dev",
    license="MIT",
    packages=find_packages(exclude=("tests", "tests.*")),
    include_package_data=True,
    package_data={"PyCayley_Cohomology._instances": ["fixtures/*.json"]},
    zip_safe=False,
    python_requires=">=3.9",
    install_requires=[
        "click>=8.1",
        "sympy>=1.12",
    ],
    extras_require={
        "test": [
            "pytest>=7.4",
            "hypothesis>=6.90",
        ],
    },
    entry_points={
        "console_scripts": [
            "cayley-check=PyCayley_Cohomology._cli:cli",
        ],
    },
)
