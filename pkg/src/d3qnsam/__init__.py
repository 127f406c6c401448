"""Dueling double DQN agents with CNN and self-attention Q-networks,
trained in a raycast depth-camera world."""

__version__ = "0.1.0"
