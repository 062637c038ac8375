from setuptools import setup, find_packages

setup(
    name="schublines",
    version="1.0",
    packages=find_packages(include=['schublines', 'schublines.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'pandas',
        'pyzmq',
        'scipy'
    ],
    extras_require={
        'test': [
            'pytest',
            'hypothesis'
        ]
    },
    entry_points={
        'console_scripts': [
            'schublines=schublines.cli.main:main'
        ]
    }
)
