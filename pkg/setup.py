# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.rst"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="rt-cover",
    version="0.1.0",
    description="Covering codes and ordered covering arrays in the "
                "Rosenbloom-Tsfasman metric.",
    long_description=long_description,
    url="https://github.com/merry-bits/rt-cover",
    author="merry-bits",
    author_email="merry-bits@users.noreply.github.com",
    license="GPLv2",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Natural Language :: English",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
    ],
    keywords=(
        "covering code ordered covering array orthogonal array "
        "Rosenbloom-Tsfasman metric combinatorics bounds"),
    packages=find_packages("src"),
    package_dir = {"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "galois>=0.3",
        "numpy>=1.17",
        "sympy>=1.5",
    ],
    # $ pip install -e .[test]
    extras_require={
        "test": ["mock>=3.0", "nose2>=0.9"],
    },
    entry_points={
        "console_scripts": ["rt-cover=rtcover.cli:main"],
    },
)
