"""Package holding the tests for the Riesz energies and the Frostman criterion."""
