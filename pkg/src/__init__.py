# Two-photon interference simulator
