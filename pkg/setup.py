from setuptools import setup, find_packages


__version__ = '0.1.0'

with open("README.md", "r") as fh:
    long_desc = fh.read()


setup(
    name='graphflow',
    version=__version__,
    packages=find_packages(exclude=['tests', 'tests.*', 'examples']),

    # Note install requirements have to be same as requirements.txt
    install_requires=[
        # utils
        'coloredlogs',
        # exact algebra
        'sympy>=1.12',
        # graph statistics
        'networkx>=2.6',
        # CLI
        'Click==7.0',
    ],
    entry_points={
        'console_scripts': [
            'graphflow=graphflow.cli.main:main'
        ],
    },
    zip_safe=False,
    include_package_data=True,
    data_files=[
        ('share/graphflow/data', ['data/manifest.json', 'data/gamma3.gsum', 'data/gamma5.gsum']),
    ],
    description="Graph complex calculus, orientation morphism and Poisson flows with exact arithmetic",
    long_description=long_desc,
    long_description_content_type="text/markdown",
    classifiers=[
        'Programming Language :: Python :: 3.8',
    ],
    python_requires='>=3.8',
)
