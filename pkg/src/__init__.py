# Discussive Lab Source Package
