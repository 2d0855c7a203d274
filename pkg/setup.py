import os
from pathlib import Path

from setuptools import find_packages, setup


def read_long_description() -> str:
    readme_path = Path(__file__).parent / "README.md"
    with readme_path.open(encoding="utf-8") as fh:
        return fh.read()


setup(
    name="dmmm-scheduler",
    version=os.getenv("CIRCLE_TAG", "0.1.0"),
    url="https://github.com/dual/dmmm-scheduler",
    author="Paul Cruse III",
    author_email="paulcruse3@gmail.com",
    description="Decision-matrix based max-min task scheduling with usage monitoring and a discrete-event simulator.",
    long_description=read_long_description(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"dmmm_scheduler": ["schemas/*.yml", "demo/*.json"]},
    include_package_data=True,
    python_requires=">=3.10",
    install_requires=[
        "jsonref>=1.1.0,<2; python_version >= '3.7'",
        "jsonschema>=4.18.0,<5; python_version >= '3.8'",
        "numpy>=1.26.0,<3; python_version >= '3.9'",
        "pyyaml>=6.0.3,<7; python_version >= '3.8'",
        "simplejson>=3.20.2,<4; python_version >= '2.5' and python_version not in '3.0, 3.1, 3.2'",
        "typing-extensions>=4.15.0,<5; python_version >= '3.9'",
    ],
    extras_require={
        "test": [
            "pytest>=8.0.0,<9",
            "hypothesis>=6.100.0,<7",
        ],
    },
    entry_points={
        "console_scripts": [
            "dmmm-scheduler=dmmm_scheduler.cli:main",
        ],
    },
    keywords=[
        "scheduling",
        "max-min",
        "min-min",
        "round-robin",
        "decision-matrix",
        "makespan",
        "simulation",
        "iaas",
        "cloud",
        "usage-monitoring",
        "python-library",
    ],
    project_urls={
        "Homepage": "https://github.com/dual/dmmm-scheduler",
        "Documentation": "https://github.com/dual/dmmm-scheduler#readme",
        "Source Code": "https://github.com/dual/dmmm-scheduler",
        "Bug Reports": "https://github.com/dual/dmmm-scheduler/issues",
        "CI/CD": "https://circleci.com/gh/dual/dmmm-scheduler",
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: System :: Distributed Computing",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3 :: Only",
    ],
    license="Apache License 2.0",
    platforms=["any"],
    zip_safe=False,
)
