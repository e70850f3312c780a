from setuptools import setup, find_packages

setup(
    name="mylogger",
    version="0.2.0",
    packages=find_packages(),
    install_requires=["colorama>=0.4.6"],
    description="Colorful stderr/file logging with timing helpers for long-running computations",
    python_requires=">=3.9",
)
