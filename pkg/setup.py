from setuptools import setup, find_packages

setup(
    name="gyrochromatic",
    version="0.1.0",
    packages=find_packages(include=["gyrochromatic", "gyrochromatic.*"]),
    install_requires=[
        "Django>=5.2",
        "djangorestframework>=3.16",
        "mylogger>=0.2.0",
        "networkx>=3.2",
        "python-decouple>=3.8",
    ],
    entry_points={"console_scripts": ["gyro=gyrochromatic.cli:main"]},
    description="Exact fractional, circular and gyrochromatic bounds with verifiable certificates",
    python_requires=">=3.10",
)
