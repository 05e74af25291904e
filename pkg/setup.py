"""
PyPhaseWizard
Binary-outcome phase metrology with coherent light in a Mach-Zehnder interferometer.
"""
import re
import sys
from setuptools import setup, find_packages

short_description = __doc__.split("\n")

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except:
    long_description = "\n".join(short_description[2:])

with open("pyphasewizard/_version.py", "r") as handle:
    version = re.search(r"__version__ = '([^']+)'", handle.read()).group(1)

setup(
    name='pyphasewizard',
    author='UIBCDF Lab',
    author_email='uibcdf@gmail.com',
    description=short_description[1],
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version,
    license='MIT',
    packages=find_packages(),
    include_package_data=True,
    setup_requires=[] + pytest_runner,
    tests_require=['pytest'],
    platforms=['Linux', 'Unix', 'Mac OS-X', 'Windows'],
    package_dir={'pyphasewizard': 'pyphasewizard'},
    entry_points={
        'console_scripts': ['pyphasewizard=pyphasewizard.cli:main'],
        },
    url='http://uibcdf.org',
    install_requires=[
        'numpy',
        'scipy',
        'pint',
      ],
    python_requires=">=3.7"
)
