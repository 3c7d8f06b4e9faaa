"""Engine services: one service per concern, wired together by LabToolkit."""
