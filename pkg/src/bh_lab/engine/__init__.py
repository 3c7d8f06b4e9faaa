"""Computation engine: services, verification checks and the LabToolkit facade."""
