from setuptools import setup, find_packages
from os import path
from algext._version import __version__


this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="algext",
    version=__version__,
    author="algext developers",
    description="Algebraic randomness extractors with an exact verification harness",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords='randomness extractors finite fields exponential sums',
    license='BSD',
    packages=find_packages(exclude=['tests*']),
    package_data={
        'algext': [
            'py.typed',
            'data/corpus/v1/*.json',
            'data/configs/*/*.ini',
        ],
    },
    package_dir={'algext': 'algext'},
    platforms=['Any'],
    install_requires=['numpy>=1.20', 'sympy>=1.8', 'galois>=0.3', 'python-dotenv>=0.15'],
    tests_require=['pytest', 'pytest-cov', 'hypothesis'],
    entry_points={
        'console_scripts': ['algext=algext.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
)
