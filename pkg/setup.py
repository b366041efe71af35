import logging
from setuptools import setup, find_packages

# Load requirements from file
try:
    with open('requirements.txt', 'r') as req_file:
        install_reqs = req_file.read().splitlines()
except Exception:
    install_reqs = []
    logging.warning('[!] Failed at loading requirements file.')

setup(
    name='dna-codes',
    version='0.1',
    description=('Construct, validate, search and bound DNA codes over '
                 'even q-ary alphabets.'),
    install_requires=install_reqs,
    extras_require={
        'test': ['pytest==8.2.2', 'hypothesis==6.103.1'],
    },
    python_requires='>=3.9',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Bio-Informatics',
        'Programming Language :: Python :: 3.9',
    ],
    keywords='dna codes deletion codes reverse complement coding theory',
    packages=find_packages(exclude=['tests']),
    entry_points={
        'console_scripts': ['dna-codes=dna_codes.cli:main'],
    },
)
