import setuptools

with open("README.md", "r", encoding="utf-8") as file:
    readme = file.read()

setuptools.setup(
    name="dual_graph_cycles",
    version="0.1.0",
    author="",
    author_email="",
    description="Exact cycle arithmetic on weighted dual graphs of normal surface singularities: fundamental cycles, "
                "Yau sequences, canonical cycles and arithmetic genus.",
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("testing", "testing.*")),
    install_requires=["networkx>=2.5", "tqdm>=4.0"],
    package_data={"dual_graph_cycles.reports": ["report.schema.json"]},
    extras_require={"test": ["pytest>=6.0", "hypothesis>=6.0", "jsonschema>=4.0"]},
    entry_points={"console_scripts": ["dual-graph-cycles=dual_graph_cycles.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
)
