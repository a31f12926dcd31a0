"""tabletalk: speaker geometry from video frames, classroom audio
simulation, and bilingual keyword-recognition metrics.

The package is organized as four library subpackages plus a thin service
layer:

- geometry: cross-ratio distance recovery and 3D speaker placement
- acoustics: shoebox image-source impulse responses and mixing
- dataset: transcript preprocessing, speech synthesis, session scheduling
- recognition: Mel features, keyword classification, evaluation metrics
- service: command-line entry points and the annotation HTTP service
"""

__version__ = "0.1.0"
