from setuptools import setup, find_packages

# The setup script is a bit simpler - we're using pyproject.toml for most configuration
# This is mainly for compatibility with older tools

setup(
    name="moykr",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "moykr=moykr.cli:main",
        ],
    },
)
